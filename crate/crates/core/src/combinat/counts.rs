use super::{binom, CheckReport, Count};
use crate::report::{instance, Verdict};
use crate::{BigCount, Error, Result};

/// Number of neighbors of a weight-`m` vertex of `Ω_2k` whose support meets
/// the vertex's support in `t` positions: `C(m, t) C(2k-m, k-t)`. Those
/// neighbors all have weight `m + k - 2t`.
pub fn neighbor_weight_count<C: Count>(k: u64, m: u64, t: u64) -> C {
    if m > 2 * k || t > k {
        return C::zero();
    }
    binom::<C>(m, t) * binom::<C>(2 * k - m, k - t)
}

/// Number of weight-`(k-1, k+1)` neighbors of a weight-`(m, 2k-m)` class in
/// the quotient, for odd `m ≤ k`. Both ways of counting it (neighbors of
/// weight `k-1` and of weight `k+1`) are evaluated and must agree.
pub fn weight_pm1_count<C: Count>(k: u64, m: u64) -> Result<C> {
    if m.is_multiple_of(2) || m == 0 || m > k {
        return Err(Error::Malformed(format!("need odd 1 ≤ m ≤ k, got m={m}, k={k}")));
    }
    let down = neighbor_weight_count::<C>(k, m, m.div_ceil(2));
    let up = neighbor_weight_count::<C>(k, m, (m - 1) / 2);
    if down != up {
        return Err(Error::Invariant(format!("k={k} m={m}: {down} ≠ {up}")));
    }
    Ok(down)
}

/// The counts for `m = 3, 5, …` (odd, `≤ k`) strictly decrease, and the
/// reduced inequality `(2k-n+2)(n+1) > n(2k-n+3)` holds for each odd
/// `1 < n ≤ k`. Vacuous when the sequence has fewer than two terms.
pub fn decreasing_counts_check(k: u64) -> CheckReport {
    let mut report = CheckReport::new("decreasing-counts", format!("k={k}"));
    let seq: Vec<BigCount> = (3..=k).step_by(2).map(|m| weight_pm1_count::<BigCount>(k, m).unwrap()).collect();
    if let Some(i) = seq.windows(2).position(|w| w[0] <= w[1]) {
        let m = 3 + 2 * i as u64;
        return report.fail(instance([("k", k.to_string()), ("m", m.to_string())]));
    }
    for n in (3..=k).step_by(2) {
        let lhs = (2 * k + 2 - n) * (n + 1);
        let rhs = n * (2 * k + 3 - n);
        if lhs <= rhs || (lhs > rhs) != (k + 1 > n) {
            return report.fail(instance([("k", k.to_string()), ("n", n.to_string())]));
        }
    }
    if seq.len() < 2 {
        report.verdict = Verdict::Vacuous;
    }
    report
}

/// [`decreasing_counts_check`] over `k_lo..=k_hi`; vacuous small `k` do not fail the range.
pub fn decreasing_counts_range(k_lo: u64, k_hi: u64) -> CheckReport {
    let report = CheckReport::new("decreasing-counts", format!("{k_lo}<=k<={k_hi}"));
    for k in k_lo..=k_hi {
        let r = decreasing_counts_check(k);
        if r.verdict == Verdict::Fail {
            return report.fail(r.counterexample.unwrap());
        }
    }
    report
}

/// `(n+1) C(n, (n+1)/2) = 4n C(n-2, (n-1)/2)` for odd `n ≥ 3`, and, when `k`
/// is given with `k ≥ (n+1)/2`, the companion
/// `(2k-n+3) C(2k-n+2, k-(n-1)/2) = 4(2k-n+2) C(2k-n, k-(n+1)/2)`.
pub fn ratio_identity_check(n: u64, k: Option<u64>) -> Result<bool> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Malformed(format!("need odd n ≥ 3, got {n}")));
    }
    let big = |x: u64| BigCount::from(x);
    let first = big(n + 1) * binom::<BigCount>(n, n.div_ceil(2)) == big(4 * n) * binom::<BigCount>(n - 2, (n - 1) / 2);
    let second = match k {
        None => true,
        Some(k) => {
            if 2 * k + 1 < n + 2 {
                return Err(Error::Malformed(format!("companion identity needs k ≥ (n+1)/2, got k={k}")));
            }
            big(2 * k + 3 - n) * binom::<BigCount>(2 * k + 2 - n, k - (n - 1) / 2)
                == big(4 * (2 * k + 2 - n)) * binom::<BigCount>(2 * k - n, k - n.div_ceil(2))
        }
    };
    Ok(first && second)
}

/// Both ratio identities for every odd `3 ≤ n ≤ k ≤ k_max`.
pub fn ratio_identities(k_max: u64) -> CheckReport {
    let report = CheckReport::new("ratio-identities", format!("odd 3<=n<=k<={k_max}"));
    for k in 3..=k_max {
        for n in (3..=k).step_by(2) {
            if !ratio_identity_check(n, Some(k)).unwrap() {
                return report.fail(instance([("k", k.to_string()), ("n", n.to_string())]));
            }
        }
    }
    report
}

/// Distinct odd class weights `m ≤ k` have distinct numbers of
/// weight-`(k-1, k+1)` neighbors.
pub fn diff_weights_check(k: u64) -> CheckReport {
    let mut report = CheckReport::new("diff-weights", format!("k={k}"));
    let mut counts: Vec<(BigCount, u64)> =
        (1..=k).step_by(2).map(|m| (weight_pm1_count::<BigCount>(k, m).unwrap(), m)).collect();
    if counts.len() < 2 {
        report.verdict = Verdict::Vacuous;
        return report;
    }
    counts.sort();
    if let Some(w) = counts.windows(2).find(|w| w[0].0 == w[1].0) {
        return report.fail(instance([("k", k.to_string()), ("m", w[0].1.to_string()), ("n", w[1].1.to_string())]));
    }
    report
}
