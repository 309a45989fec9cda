//! Small numeric utilities shared across modules: scalar minimization,
//! least squares, sample statistics, and deterministic seed derivation.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search on `[lo, hi]`. The interval is shrunk until its
/// width drops below `rel_tol * max(|lo|, |hi|, 1)`. Assumes `f` is
/// unimodal on the bracket; callers that cannot guarantee this should use
/// [`minimize_scan_golden`].
pub fn golden_min(f: impl Fn(f64) -> f64, lo: f64, hi: f64, rel_tol: f64) -> (f64, f64) {
    let mut a = lo;
    let mut b = hi;
    let tol = rel_tol * lo.abs().max(hi.abs()).max(1.0);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let xm = 0.5 * (a + b);
    (xm, f(xm))
}

/// Coarse scan followed by a golden-section polish. The scan guards
/// against picking the wrong valley when the objective is only
/// empirically unimodal. Returns `(argmin, min)`.
pub fn minimize_scan_golden(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    scan_points: usize,
    rel_tol: f64,
) -> (f64, f64) {
    debug_assert!(scan_points >= 3 && hi > lo);
    let n = scan_points.max(3);
    let step = (hi - lo) / (n - 1) as f64;
    let mut best_i = 0;
    let mut best_v = f64::INFINITY;
    for i in 0..n {
        let v = f(lo + step * i as f64);
        if v < best_v {
            best_v = v;
            best_i = i;
        }
    }
    if !best_v.is_finite() {
        return (lo, best_v);
    }
    let a = lo + step * best_i.saturating_sub(1) as f64;
    let b = (lo + step * (best_i + 1) as f64).min(hi);
    golden_min(f, a, b, rel_tol)
}

/// Ordinary least squares of `y` on `x`. Returns `(slope, intercept, r2)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::Precondition(
            "linear fit needs at least two paired points".into(),
        ));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::Precondition(
            "degenerate grid: all abscissae equal".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Ok((slope, intercept, r2))
}

/// Sample mean and standard error (n-1 divisor). A single sample yields a
/// NaN standard error.
pub fn mean_stderr(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return (mean, f64::NAN);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64;
    (mean, (var / n as f64).sqrt())
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic RNG derivation: `master` plus a tag path (replica index,
/// time index, purpose, ...) expand into an independent ChaCha stream.
/// Distinct tag paths give statistically independent generators, and the
/// construction is stable across platforms and runs.
pub fn rng_for(master: u64, tags: &[u64]) -> ChaCha12Rng {
    let mut state = master ^ 0x6a09_e667_f3bc_c908;
    for &t in tags {
        state ^= splitmix64(&mut state).wrapping_add(t.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        state = state.rotate_left(17);
    }
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha12Rng::from_seed(seed)
}

/// Stable FNV-1a hash of a byte string, used for config fingerprints.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, v) = golden_min(|x| (x - 0.3).powi(2) + 1.0, -2.0, 2.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-7, "argmin {x}");
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scan_golden_picks_global_valley() {
        // Two valleys; the deeper one is on the right.
        let f = |x: f64| (x + 1.0).powi(2).min((x - 1.0).powi(2) - 0.5);
        let (x, _) = minimize_scan_golden(f, -3.0, 3.0, 64, 1e-9);
        assert!((x - 1.0).abs() < 1e-5, "argmin {x}");
    }

    #[test]
    fn linear_fit_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 - 0.5 * x).collect();
        let (slope, intercept, r2) = linear_fit(&xs, &ys).unwrap();
        assert!((slope + 0.5).abs() < 1e-12);
        assert!((intercept - 3.0).abs() < 1e-12);
        assert!((r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rng_derivation_is_deterministic_and_tag_sensitive() {
        let mut a = rng_for(7, &[1, 2]);
        let mut b = rng_for(7, &[1, 2]);
        let mut c = rng_for(7, &[2, 1]);
        let xa: f64 = a.random();
        let xb: f64 = b.random();
        let xc: f64 = c.random();
        assert_eq!(xa, xb);
        assert_ne!(xa, xc);
    }

    #[test]
    fn mean_stderr_matches_hand_computation() {
        let (m, se) = mean_stderr(&[1.0, 2.0, 3.0, 4.0]);
        assert!((m - 2.5).abs() < 1e-15);
        // sample variance 5/3, se = sqrt(5/12)
        assert!((se - (5.0f64 / 12.0).sqrt()).abs() < 1e-15);
    }
}
