//! Explicit small graphs with bitset adjacency, plus edge-list and DOT export.

use std::collections::VecDeque;
use std::io::{self, Write};

/// Read-only view of a simple undirected graph on vertices `0..order()`.
pub trait Graph {
    fn order(&self) -> usize;

    fn is_edge(&self, u: usize, v: usize) -> bool;

    fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.is_edge(u, v)).collect()
    }

    fn to_dense(&self) -> DenseGraph {
        let n = self.order();
        let mut g = DenseGraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if self.is_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// A materialized graph. Adjacency is kept both as bit rows (for O(1)
/// queries and neighborhood comparison) and as sorted lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    adj: Vec<Vec<u32>>,
}

impl DenseGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        DenseGraph { n, words, rows: vec![0; n * words], adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Self {
        Self::circulant(n, &[1])
    }

    /// `C_n[jumps]`: `i ~ j` iff `(i - j) mod n` is `±s` for some jump `s`.
    pub fn circulant(n: usize, jumps: &[usize]) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for &s in jumps {
                let j = (i + s) % n;
                if i != j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &DenseGraph) -> Self {
        let off = self.n;
        Self::from_edges(self.n + other.n, self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off))))
    }

    /// Subgraph induced by `vertices`; new vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.is_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v})");
        if self.is_edge(u, v) {
            return;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        let (lu, lv) = (&mut self.adj[u], v as u32);
        lu.insert(lu.binary_search(&lv).unwrap_err(), lv);
        let (lv2, lu2) = (&mut self.adj[v], u as u32);
        lv2.insert(lv2.binary_search(&lu2).unwrap_err(), lu2);
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn adjacency(&self, u: usize) -> &[u32] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(|&v| v as usize).filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    let v = v as usize;
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-coloring (`false`/`true` per vertex) if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.adj[u] {
                    match side[v as usize] {
                        None => {
                            side[v as usize] = Some(!su);
                            queue.push_back(v as usize);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// True when `u` and `v` have the same neighborhood apart from each
    /// other, i.e. the transposition `(u v)` is an automorphism.
    pub fn swappable(&self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.row(u), self.row(v));
        ru.iter().zip(rv).enumerate().all(|(i, (&a, &b))| {
            let mut mask = !0u64;
            if u / 64 == i {
                mask &= !(1 << (u % 64));
            }
            if v / 64 == i {
                mask &= !(1 << (v % 64));
            }
            a & mask == b & mask
        })
    }

    /// Writes `"u w\n"` per edge, decimal, `u < w`.
    pub fn write_edge_list<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn write_dot<W: Write>(&self, out: &mut W, graph_name: &str, name: impl Fn(usize) -> String) -> io::Result<()> {
        writeln!(out, "graph {graph_name} {{")?;
        for u in 0..self.n {
            writeln!(out, "  \"{}\";", name(u))?;
        }
        for (u, v) in self.edges() {
            writeln!(out, "  \"{}\" -- \"{}\";", name(u), name(v))?;
        }
        writeln!(out, "}}")
    }
}

impl Graph for DenseGraph {
    fn order(&self) -> usize {
        self.n
    }

    fn is_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        self.adj[u].iter().map(|&v| v as usize).collect()
    }

    fn to_dense(&self) -> DenseGraph {
        self.clone()
    }
}
