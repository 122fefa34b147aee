//! Closed-form bounds and the known exact values of `g(Δ,k)` and `h(Δ,k)`.
//!
//! Everything with an integer answer is computed by searching binomial
//! thresholds; the square-root forms are kept only as cross-checks.

use crate::error::{Error, Result};

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// `a_j = C(j+1, 2) + 1`: 2, 4, 7, 11, ...
pub fn a_seq(j: usize) -> usize {
    binom2(j + 1) + 1
}

/// Smallest `t >= 0` with `Δ <= C(t+2, 2)`; the sharp bound on `f(G)` for
/// graphs of maximum degree `Δ` (and 0 for `Δ <= 1`).
pub fn bound_f_delta(delta: usize) -> usize {
    // the answer satisfies (t+2)^2 > 2Δ, so the scan starts just below it
    let start = (2 * delta).isqrt().saturating_sub(2);
    (start..).find(|&t| delta <= binom2(t + 2)).unwrap()
}

/// Smallest `t >= 1` with `n <= C(t+2, 2) + 2`; the sharp bound on `f(G)`
/// over graphs on `n >= 4` vertices.
pub fn bound_f_n(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "n must be at least 4, got {n}"
        )));
    }
    let start = (2 * (n - 2)).isqrt().saturating_sub(2).max(1);
    Ok((start..).find(|&t| n <= binom2(t + 2) + 2).unwrap())
}

/// `⌈(-3 + √(8Δ+1)) / 2⌉`, clamped at 0.
pub fn bound_f_delta_float(delta: usize) -> usize {
    let x = (-3.0 + (8.0 * delta as f64 + 1.0).sqrt()) / 2.0;
    x.ceil().max(0.0) as usize
}

/// `⌈(-3 + √(8n-15)) / 2⌉` for `n >= 4`.
pub fn bound_f_n_float(n: usize) -> usize {
    let x = (-3.0 + (8.0 * n as f64 - 15.0).sqrt()) / 2.0;
    x.ceil() as usize
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    Ok(())
}

/// `g(Δ,k)`, known for `Δ <= 2` and for `k = 2`.
pub fn g_exact(delta: usize, k: usize) -> Result<usize> {
    check_k(k)?;
    match (delta, k) {
        (0, _) => Ok(0),
        (1, _) => Ok((k - 1) / 2),
        (2, _) => Ok(k - 1),
        (_, 2) => Ok(bound_f_delta(delta)),
        _ => Err(Error::Unknown(format!("g({delta},{k}) is an open problem"))),
    }
}

/// `h(Δ,k)`, the largest order of a non-k-feasible graph with maximum
/// degree at most `Δ`; known for `Δ <= 2`.
pub fn h_exact(delta: usize, k: usize) -> Result<usize> {
    check_k(k)?;
    match delta {
        0 => Ok(k - 1),
        1 => Ok(k / 2 + 2 * ((k - 1) / 2)),
        2 if k % 2 == 1 => Ok(2 * k - 2),
        2 => Ok(2 * k - 3),
        _ => Err(Error::Unknown(format!("h({delta},{k}) is an open problem"))),
    }
}

/// `(k-1)·Δ`, the greedy upper bound on `f_k`.
pub fn lemma_bound(k: usize, delta: usize) -> usize {
    k.saturating_sub(1) * delta
}

/// `(k - 1 + 2c)·n^((1+β)/2)`, an upper bound on `f_k(G)` whenever
/// `e(G) <= c·n^(1+β)`.
pub fn sparse_bound(n: usize, c: f64, beta: f64, k: usize) -> Result<f64> {
    if !(0.0..1.0).contains(&beta) || c <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= beta < 1 and c > 0, got beta = {beta}, c = {c}"
        )));
    }
    let alpha = (1.0 + beta) / 2.0;
    Ok((k as f64 - 1.0 + 2.0 * c) * (n as f64).powf(alpha))
}

/// `g(Δ,2)·k/2 + k/2 - 1`, a lower bound on `g(Δ,k)` for even `k`.
pub fn g_lower_even(delta: usize, k: usize) -> Result<usize> {
    check_k(k)?;
    if k % 2 == 1 {
        return Err(Error::InvalidParameter(format!("k must be even, got {k}")));
    }
    Ok(g_exact(delta, 2)? * k / 2 + k / 2 - 1)
}

/// `R(k,k) - 1` for the diagonal Ramsey numbers known exactly.
pub fn h_ramsey_cap(k: usize) -> Result<usize> {
    match k {
        2 => Ok(1),
        3 => Ok(5),
        4 => Ok(17),
        0 | 1 => Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        ))),
        _ => Err(Error::Unknown(format!("R({k},{k}) is not known exactly"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_bound_examples() {
        assert_eq!(bound_f_delta(13), 4);
        assert_eq!(bound_f_delta(1), 0);
        assert_eq!(bound_f_delta(0), 0);
        assert_eq!(bound_f_delta(4), 2);
        assert_eq!(bound_f_delta(2), 1);
        assert_eq!(bound_f_delta(3), 1);
    }

    #[test]
    fn n_bound_examples() {
        assert_eq!(bound_f_n(9).unwrap(), 3);
        assert_eq!(bound_f_n(4).unwrap(), 1);
        assert_eq!(bound_f_n(14).unwrap(), 4);
        assert!(bound_f_n(3).is_err());
    }

    #[test]
    fn sequence_a() {
        assert_eq!((1..=4).map(a_seq).collect::<Vec<_>>(), vec![2, 4, 7, 11]);
    }

    #[test]
    fn g_values() {
        assert_eq!(g_exact(2, 5).unwrap(), 4);
        assert_eq!(g_exact(1, 5).unwrap(), 2);
        assert_eq!(g_exact(0, 9).unwrap(), 0);
        assert_eq!(g_exact(13, 2).unwrap(), 4);
        assert!(matches!(g_exact(3, 3), Err(Error::Unknown(_))));
        assert!(matches!(g_exact(3, 1), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn h_values() {
        assert_eq!(h_exact(2, 5).unwrap(), 8);
        assert_eq!(h_exact(2, 4).unwrap(), 5);
        assert_eq!(h_exact(1, 3).unwrap(), 3);
        assert_eq!(h_exact(0, 7).unwrap(), 6);
        assert_eq!(h_exact(2, 2).unwrap(), 1);
        assert!(matches!(h_exact(3, 4), Err(Error::Unknown(_))));
    }

    #[test]
    fn lemma_and_lower_bounds() {
        assert_eq!(lemma_bound(4, 5), 15);
        assert_eq!(lemma_bound(2, 0), 0);
        assert_eq!(lemma_bound(3, 2), 4);
        assert_eq!(g_lower_even(7, 4).unwrap(), 7);
        assert_eq!(g_lower_even(2, 2).unwrap(), 1);
        assert_eq!(g_lower_even(13, 2).unwrap(), 4);
        assert!(g_lower_even(7, 3).is_err());
    }

    #[test]
    fn sparse_bound_examples() {
        assert!((sparse_bound(100, 1.0, 0.0, 3).unwrap() - 40.0).abs() < 1e-9);
        assert!((sparse_bound(4, 0.5, 0.0, 2).unwrap() - 4.0).abs() < 1e-9);
        assert!((sparse_bound(1, 0.75, 0.5, 5).unwrap() - 5.5).abs() < 1e-9);
        assert!(sparse_bound(10, 1.0, 1.0, 2).is_err());
        assert!(sparse_bound(10, 0.0, 0.0, 2).is_err());
    }

    #[test]
    fn ramsey_caps() {
        assert_eq!(h_ramsey_cap(2).unwrap(), 1);
        assert_eq!(h_ramsey_cap(3).unwrap(), 5);
        assert_eq!(h_ramsey_cap(4).unwrap(), 17);
        assert!(matches!(h_ramsey_cap(5), Err(Error::Unknown(_))));
    }

    #[test]
    fn integer_and_float_forms_agree() {
        for delta in 1..=1_000_000 {
            assert_eq!(
                bound_f_delta(delta),
                bound_f_delta_float(delta),
                "Δ = {delta}"
            );
        }
        for n in 4..=1_000_000 {
            assert_eq!(bound_f_n(n).unwrap(), bound_f_n_float(n), "n = {n}");
        }
    }
}
