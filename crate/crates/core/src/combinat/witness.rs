use serde::Serialize;

use super::CheckReport;
use crate::report::{instance, Verdict};
use crate::{Bits, Error, OmegaQuotient, Result};

/// Two distinct vertices of `Ω_2k` of equal odd weight `m`, `1 < m < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessRequest {
    pub u: Bits,
    pub w: Bits,
}

impl WitnessRequest {
    pub fn new(u: Bits, w: Bits) -> Result<Self> {
        let req = WitnessRequest { u, w };
        req.validate()?;
        Ok(req)
    }

    pub fn k(&self) -> u32 {
        self.u.k()
    }

    pub fn m(&self) -> u32 {
        self.u.weight()
    }

    pub fn validate(&self) -> Result<()> {
        let (u, w) = (self.u, self.w);
        let k = u.k();
        if w.k() != k {
            return Err(Error::Malformed("u and w have different widths".into()));
        }
        let m = u.weight();
        if w.weight() != m {
            return Err(Error::Malformed(format!("weights differ: {} vs {}", m, w.weight())));
        }
        if m % 2 == 0 || m <= 1 || m >= k {
            return Err(Error::Malformed(format!("need odd 1 < m < k, got m={m}, k={k}")));
        }
        if u == w {
            return Err(Error::Malformed("u and w must be distinct".into()));
        }
        Ok(())
    }
}

/// How many support positions of `v` come from each region of the Venn
/// diagram of `supp(u)` and `supp(w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Picks {
    pub u_only: u32,
    pub w_only: u32,
    pub both: u32,
    pub outside: u32,
}

impl Picks {
    pub fn total(&self) -> u32 {
        self.u_only + self.w_only + self.both + self.outside
    }
}

/// Region counts for `|supp u| = |supp w| = m` and overlap `r`, odd
/// `1 < m ≤ k`.
///
/// With `r = 0`, `(m+1)/2` from each support. With `r = 2b` even and
/// `m = 2a + 1 + 2b`: `a+1, a+1, b` and `k-(2a+b+2)` outside. With
/// `r = 2b + 1` odd and `m = 2a + 2b + 1`: `a+1, a, b` and `k-(2a+b+1)`
/// outside, which is what makes `|v| = k` and `|u ∩ v| = (m+1)/2`.
pub fn witness_picks(k: u32, m: u32, r: u32) -> Result<Picks> {
    if m.is_multiple_of(2) || m <= 1 || m > k || r >= m {
        return Err(Error::Malformed(format!("no construction for k={k}, m={m}, r={r}")));
    }
    let sub = |a: u32, b: u32| {
        a.checked_sub(b).ok_or_else(|| Error::Invariant(format!("negative pick at k={k}, m={m}, r={r}")))
    };
    let picks = if r == 0 {
        let h = m.div_ceil(2);
        Picks { u_only: h, w_only: h, both: 0, outside: sub(k, m + 1)? }
    } else if r % 2 == 1 {
        let b = (r - 1) / 2;
        let a = (m - r) / 2;
        Picks { u_only: a + 1, w_only: a, both: b, outside: sub(k, 2 * a + b + 1)? }
    } else {
        let b = r / 2;
        let a = (m - r - 1) / 2;
        Picks { u_only: a + 1, w_only: a + 1, both: b, outside: sub(k, 2 * a + b + 2)? }
    };
    Ok(picks)
}

/// A weight-`(k-1)` vertex adjacent to `u` but not to `w`. Positions are
/// taken lowest-first within each region.
pub fn same_weight_witness(req: &WitnessRequest) -> Result<Bits> {
    req.validate()?;
    let (u, w) = (req.u, req.w);
    let k = u.k();
    let (uv, wv) = (u.value(), w.value());
    let full = (1u64 << (2 * k)) - 1;
    let r = (uv & wv).count_ones();
    let picks = witness_picks(k, req.m(), r)?;
    let take = |region: u64, count: u32| -> Result<u64> {
        let mut out = 0u64;
        let mut rest = region;
        for _ in 0..count {
            if rest == 0 {
                return Err(Error::Invariant(format!("region {region:#b} too small for {count} picks")));
            }
            let low = rest & rest.wrapping_neg();
            out |= low;
            rest ^= low;
        }
        Ok(out)
    };
    let v = take(uv & !wv, picks.u_only)?
        | take(wv & !uv, picks.w_only)?
        | take(uv & wv, picks.both)?
        | take(full & !(uv | wv), picks.outside)?;
    let y = Bits::new(k, uv ^ v)?;
    if v.count_ones() != k || y.weight() != k - 1 || (y.value() ^ wv).count_ones() == k {
        return Err(Error::Invariant(format!("construction failed for u={u}, w={w}")));
    }
    Ok(y)
}

/// Every admissible `(m, r)` at this `k` yields nonnegative picks that fit
/// their regions, and for odd `r` the outside region is larger than twice
/// the outside pick count minus one (`2k-(4a+2b+1) > 2[k-(2a+b+1)]`).
pub fn case_counts_sanity(k: u32) -> CheckReport {
    let mut report = CheckReport::new("witness-counts", format!("k={k}"));
    let mut any = false;
    for m in (3..k).step_by(2) {
        for r in 0..m {
            any = true;
            let at = || instance([("k", k.to_string()), ("m", m.to_string()), ("r", r.to_string())]);
            let Ok(p) = witness_picks(k, m, r) else {
                return report.fail(at());
            };
            let outside_size = 2 * k + r - 2 * m;
            let fits = p.u_only <= m - r
                && p.w_only <= m - r
                && p.both <= r
                && p.outside <= outside_size
                && p.total() == k
                && p.u_only + p.both == m.div_ceil(2);
            let inequality = if r % 2 == 1 {
                let (a, b) = ((m - r) / 2, (r - 1) / 2);
                (2 * k) as i64 - (4 * a + 2 * b + 1) as i64 > 2 * (k as i64 - (2 * a + b + 1) as i64)
            } else {
                true
            };
            if !(fits && inequality) {
                return report.fail(at());
            }
        }
    }
    if !any {
        report.verdict = Verdict::Vacuous;
    }
    report
}

/// Among odd classes of `Ω̃_2k`, the neighbor sets restricted to the
/// weight-`(k-1, k+1)` classes are pairwise distinct.
pub fn unique_neighbors_check(k: u32) -> Result<CheckReport> {
    let q = OmegaQuotient::new(k)?;
    let g = q.materialize()?;
    let mut report = CheckReport::new("unique-neighborhoods", format!("k={k}"));
    let target: Vec<bool> = q.classes().map(|c| c.weight().0 == k - 1).collect();
    let mut seen: Vec<(Vec<u64>, u64)> = q
        .classes()
        .filter(|c| c.is_odd())
        .map(|c| {
            let i = c.index() as usize;
            let mut row = g.row(i).to_vec();
            for (j, &t) in target.iter().enumerate() {
                if !t {
                    row[j / 64] &= !(1 << (j % 64));
                }
            }
            (row, c.index())
        })
        .collect();
    if seen.len() < 2 {
        report.verdict = Verdict::Vacuous;
        return Ok(report);
    }
    seen.sort();
    if let Some(w) = seen.windows(2).find(|w| w[0].0 == w[1].0) {
        return Ok(report.fail(instance([("k", k.to_string()), ("a", w[0].1.to_string()), ("b", w[1].1.to_string())])));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::masks_of_weight;
    use rand::{Rng, SeedableRng};

    fn b(s: &str) -> Bits {
        Bits::parse(s).unwrap()
    }

    fn check(u: &str, w: &str) -> Bits {
        let (u, w) = (b(u), b(w));
        let y = same_weight_witness(&WitnessRequest::new(u, w).unwrap()).unwrap();
        let k = u.k();
        assert_eq!(y.weight(), k - 1);
        assert_eq!((y + u).weight(), k);
        assert_ne!((y + w).weight(), k);
        y
    }

    #[test]
    fn disjoint_supports() {
        let y = check("00000111", "00111000");
        // Picks 2 from {1,2,3}, 2 from {4,5,6}, 0 outside: v = {1,2,4,5}.
        assert_eq!(y.support(), vec![3, 4, 5]);
        assert_eq!((y + b("00111000")).weight(), 2);
    }

    #[test]
    fn even_overlap() {
        // r = 2, b = 1, a = 0.
        let y = check("0000000111", "0000001011");
        assert_eq!(y.support(), vec![2, 4, 5, 6]);
        assert_eq!((y + b("0000001011")).weight(), 3);
        let y = check("00000111", "00010110");
        assert_eq!(y.support(), vec![3, 4, 5]);
    }

    #[test]
    fn odd_overlap() {
        // r = 1: supports {1,2,3} and {1,4,5}; a = 1, b = 0.
        let (u, w) = ("00000111", "00011001");
        assert_eq!((b(u).value() & b(w).value()).count_ones(), 1);
        let y = check(u, w);
        assert_eq!((y + b(w)).weight(), 2);
    }

    #[test]
    fn printed_odd_case_picks_are_short() {
        // a, a, b, k-(2a+b+1) sums to k-1, so that v is not a neighbor offset.
        let (k, a, bb) = (4u32, 1u32, 0u32);
        assert_eq!(a + a + bb + (k - (2 * a + bb + 1)), k - 1);
        assert_eq!(witness_picks(4, 3, 1).unwrap().total(), 4);
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(WitnessRequest::new(b("00000111"), b("00000111")).is_err());
        assert!(WitnessRequest::new(b("00000011"), b("00000101")).is_err());
        assert!(WitnessRequest::new(b("00000001"), b("00000010")).is_err());
        assert!(WitnessRequest::new(b("00011111"), b("11111000")).is_err());
        assert!(WitnessRequest::new(b("000111"), b("00000111")).is_err());
    }

    #[test]
    fn exhaustive_small_k() {
        for k in 4..=5u32 {
            for m in (3..k).step_by(2) {
                let all: Vec<u64> = masks_of_weight::<u64>(2 * k, m).collect();
                for &u in &all {
                    for &w in &all {
                        if u != w {
                            let req = WitnessRequest::new(Bits::new(k, u).unwrap(), Bits::new(k, w).unwrap()).unwrap();
                            same_weight_witness(&req).unwrap();
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn random_larger_k() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for k in 6..=10u32 {
            for _ in 0..500 {
                let m = 2 * rng.gen_range(1..k.div_ceil(2)) + 1;
                if m >= k {
                    continue;
                }
                let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let mut v = 0u64;
                    while v.count_ones() < m {
                        v |= 1 << rng.gen_range(0..2 * k);
                    }
                    Bits::new(k, v).unwrap()
                };
                let (u, w) = (pick(&mut rng), pick(&mut rng));
                if u != w {
                    same_weight_witness(&WitnessRequest::new(u, w).unwrap()).unwrap();
                }
            }
        }
    }

    #[test]
    fn counts_sanity() {
        let p = witness_picks(4, 3, 1).unwrap();
        assert_eq!(p, Picks { u_only: 2, w_only: 1, both: 0, outside: 1 });
        assert_eq!(witness_picks(5, 5, 4).unwrap().outside, 1);
        for k in 4..=50 {
            assert_eq!(case_counts_sanity(k).verdict, Verdict::Pass, "k={k}");
        }
        assert_eq!(case_counts_sanity(3).verdict, Verdict::Vacuous);
    }

    #[test]
    fn unique_neighbors() {
        assert_eq!(unique_neighbors_check(1).unwrap().verdict, Verdict::Vacuous);
        for k in 2..=4 {
            assert_eq!(unique_neighbors_check(k).unwrap().verdict, Verdict::Pass, "k={k}");
        }
        assert!(unique_neighbors_check(5).is_err());
    }
}
