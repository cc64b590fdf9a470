//! Polylogarithm machinery behind the closed-form summation engine.
//!
//! The spline series group harmonics into residue classes `l ≡ ±k (mod N)`
//! with weights `l^{-s}`. Writing them through `Li_s(e^{iθ}) = Σ_{l≥1} e^{ilθ}/l^s`
//! and a roots-of-unity filter turns every infinite tail into a handful of
//! polylogarithm evaluations:
//!
//! ```text
//! Σ_{l ≡ a (mod N)} l^{-s} e^{ilθ} = (1/N) Σ_{p=0}^{N-1} e^{-2πipa/N} Li_s(e^{i(θ + 2πp/N)})
//! ```
//!
//! For integer `s ≥ 2` and `0 < |θ| ≤ π` the polylogarithm is computed from
//! the expansion
//!
//! ```text
//! Li_s(e^μ) = μ^{s-1}/(s-1)! (H_{s-1} − ln(−μ)) + Σ_{q≥0, q≠s-1} ζ(s−q) μ^q / q!,   μ = iθ,
//! ```
//!
//! whose terms decay like `(θ/2π)^2` per stored entry, so machine precision is
//! reached in well under a hundred terms. Negative zeta values enter through
//! Bernoulli numbers; the coefficients are assembled as stable products so no
//! intermediate overflows even for large `s`.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};
use std::sync::{Arc, Mutex, OnceLock};

/// Pairs of extra series entries kept beyond `q = s − 1`. The term ratio is
/// at most 1/4 at `θ = π`, so 48 pairs leave the tail below 1e-28.
const NEG_PAIRS: usize = 48;

/// Small Bernoulli numbers used by the Euler-Maclaurin corrections.
const B2: f64 = 1.0 / 6.0;
const B4: f64 = -1.0 / 30.0;
const B6: f64 = 1.0 / 42.0;
const B8: f64 = -1.0 / 30.0;

/// ζ(m) for integer m ≥ 2 via Euler-Maclaurin at J = 64.
///
/// The remainder after the B₈ correction is below 1e-20 for every m ≥ 2.
pub(crate) fn zeta_pos(m: u32) -> f64 {
    debug_assert!(m >= 2);
    let s = m as f64;
    const J: usize = 64;
    let jf = J as f64;
    let mut sum = 0.0;
    for j in 1..J {
        sum += (j as f64).powi(-(m as i32));
    }
    let jpow = jf.powi(-(m as i32));
    sum += 0.5 * jpow + jf.powi(1 - m as i32) / (s - 1.0);
    // Σ B_{2i}/(2i)! · s(s+1)…(s+2i−2) · J^{−s−2i+1}
    let mut rising = s;
    sum += B2 / 2.0 * rising * jf.powi(-(m as i32) - 1);
    rising *= (s + 1.0) * (s + 2.0);
    sum += B4 / 24.0 * rising * jf.powi(-(m as i32) - 3);
    rising *= (s + 3.0) * (s + 4.0);
    sum += B6 / 720.0 * rising * jf.powi(-(m as i32) - 5);
    rising *= (s + 5.0) * (s + 6.0);
    sum += B8 / 40320.0 * rising * jf.powi(-(m as i32) - 7);
    sum
}

/// Precomputed expansion coefficients of `Li_s(e^{iθ})` for one integer `s`.
struct LiCoeffs {
    s: u32,
    /// Entries `(q, ζ(s−q)/q!)` for every q with a nonzero coefficient,
    /// ascending in q and skipping q = s − 1.
    terms: Vec<(u32, f64)>,
    /// `H_{s−1}`
    harmonic: f64,
    /// `1/(s−1)!`
    inv_fact: f64,
}

impl LiCoeffs {
    fn build(s: u32) -> Self {
        assert!((2..=MAX_S).contains(&s), "polylog order out of range");
        let mut terms = Vec::new();
        // q = 0 .. s−2: positive zeta arguments s−q ∈ {2..s}
        let mut fact_inv = 1.0; // 1/q!
        for q in 0..=(s - 2) {
            if q > 0 {
                fact_inv /= q as f64;
            }
            terms.push((q, zeta_pos(s - q) * fact_inv));
        }
        // q = s: ζ(0) = −1/2
        let mut inv_fact_s = fact_inv; // currently 1/(s−2)!
        inv_fact_s /= (s - 1) as f64;
        let inv_fact_sm1 = inv_fact_s; // 1/(s−1)!
        inv_fact_s /= s as f64; // 1/s!
        terms.push((s, -0.5 * inv_fact_s));
        // q = s − 1 + 2k: ζ(1−2k) = (−1)^k · 2 ζ(2k) (2k)! / ((2π)^{2k} · 2k)
        for k in 1..=NEG_PAIRS as u32 {
            let q = s - 1 + 2 * k;
            // |ζ(1−2k)|/q! = 2 ζ(2k)/(2k) · (2k)!/(2π)^{2k} · 1/q!, assembled as
            // products of moderate factors so nothing overflows
            let mut c = 2.0 * zeta_pos(2 * k) / (2.0 * k as f64);
            for i in 1..=(2 * k) {
                c *= i as f64 / TAU;
            }
            for i in 1..=q {
                c /= i as f64;
            }
            if k % 2 == 1 {
                c = -c;
            }
            terms.push((q, c));
        }
        let harmonic = (1..s).map(|i| 1.0 / i as f64).sum();
        LiCoeffs {
            s,
            terms,
            harmonic,
            inv_fact: inv_fact_sm1,
        }
    }

    /// `Li_s(e^{iθ})` for `0 < θ ≤ π`, returned as (re, im).
    fn eval(&self, theta: f64) -> (f64, f64) {
        let s = self.s;
        // log term: (iθ)^{s−1}/(s−1)! · (H_{s−1} − ln θ + iπ/2)
        let w = theta.powi(s as i32 - 1) * self.inv_fact;
        let a = self.harmonic - theta.ln();
        let b = PI / 2.0;
        let (mut re, mut im) = rotate(a * w, b * w, (s - 1) % 4);

        let mut th_pow = 1.0;
        let mut last_q = 0u32;
        for &(q, coef) in &self.terms {
            for _ in last_q..q {
                th_pow *= theta;
            }
            last_q = q;
            let t = coef * th_pow;
            match q % 4 {
                0 => re += t,
                1 => im += t,
                2 => re -= t,
                _ => im -= t,
            }
        }
        (re, im)
    }
}

/// Largest supported `s = r + 1`. The automatic engine never routes larger
/// orders here (their certified direct term counts are tiny).
pub(crate) const MAX_S: u32 = 100;

fn coeff_cache(s: u32) -> Arc<LiCoeffs> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<LiCoeffs>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().expect("polylog cache poisoned");
    map.entry(s)
        .or_insert_with(|| Arc::new(LiCoeffs::build(s)))
        .clone()
}

/// `Li_s(e^{iθ})` for integer `s ≥ 2` and any real θ, as (re, im).
pub(crate) fn polylog_exp(s: u32, theta: f64) -> (f64, f64) {
    let mut th = theta.rem_euclid(TAU);
    if th > PI {
        th -= TAU;
    }
    if th == 0.0 {
        return (zeta_pos(s), 0.0);
    }
    let coeffs = coeff_cache(s);
    if th > 0.0 {
        coeffs.eval(th)
    } else {
        let (re, im) = coeffs.eval(-th);
        (re, -im)
    }
}

/// Multiplies `(re, im)` by `i^quarter`.
fn rotate(re: f64, im: f64, quarter: u32) -> (f64, f64) {
    match quarter {
        0 => (re, im),
        1 => (-im, re),
        2 => (-re, -im),
        _ => (im, -re),
    }
}

/// The N polylogarithm values `Li_s` at the shifted angles `θ* + 2πp/N`,
/// shared by every residue filter at one evaluation point.
pub(crate) struct PointSums {
    n_nodes: usize,
    li: Vec<(f64, f64)>,
}

impl PointSums {
    pub(crate) fn new(s: u32, n_nodes: usize, theta_star: f64) -> Self {
        let li = (0..n_nodes)
            .map(|p| polylog_exp(s, theta_star + TAU * p as f64 / n_nodes as f64))
            .collect();
        Self { n_nodes, li }
    }

    /// `Q_a = Σ_{l ≡ a (mod N), l ≥ 1} l^{-s} e^{ilθ*}` via the residue filter.
    pub(crate) fn filtered(&self, residue: usize) -> (f64, f64) {
        let n = self.n_nodes as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (p, &(lre, lim)) in self.li.iter().enumerate() {
            let ang = TAU * (p * residue % self.n_nodes) as f64 / n;
            let (c, s) = (ang.cos(), ang.sin());
            // e^{-i ang} · (lre + i lim)
            re += lre * c + lim * s;
            im += lim * c - lre * s;
        }
        (re / n, im / n)
    }
}
