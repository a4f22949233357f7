//! Root extraction in `Q(ζ_N)`: floating-point root isolation followed by
//! integer reconstruction in the power basis and exact verification.

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclotomic::{gcd, normalize_conductor, totient, CycScalar};
use super::interval::ComplexInterval;
use super::rational::{common_denominator, Rat};

/// Recovers an element of `Q(ζ_N)` with denominators at most `denom_bound`
/// from a single certified image, which determines it when `φ(N) ≤ 2`.
///
/// Returns `None` when no candidate lies in the enclosure; the caller is
/// expected to verify any returned value exactly.
pub fn reconstruct(z: &ComplexInterval, n: u32, denom_bound: u64) -> Option<CycScalar> {
    let n = normalize_conductor(n);
    let phi = totient(n);
    let approx = z.to_c64();
    let coords: Vec<f64> = match phi {
        1 => vec![approx.re],
        2 => {
            let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / n as f64);
            let b = approx.im / w.im;
            vec![approx.re - b * w.re, b]
        }
        _ => return None,
    };
    let mut out = Vec::with_capacity(coords.len());
    for c in coords {
        out.push(nearest_fraction(c, denom_bound)?);
    }
    let candidate = CycScalar::from_coeffs(n, out);
    let img = super::interval::embed_at(&candidate, 1, 96);
    let tol = BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
    let close = |a: &super::interval::Interval, b: &super::interval::Interval| {
        a.lo <= &b.hi + &tol && b.lo <= &a.hi + &tol
    };
    if close(&img.re, &z.re) && close(&img.im, &z.im) {
        Some(candidate)
    } else {
        None
    }
}

/// The fraction with denominator at most `bound` nearest to `x`, if it is within `1e-6`.
fn nearest_fraction(x: f64, bound: u64) -> Option<Rat> {
    let mut best: Option<(f64, Rat)> = None;
    for q in 1..=bound.max(1) {
        let p = (x * q as f64).round();
        let err = (x - p / q as f64).abs();
        if err < 1e-6 && best.as_ref().is_none_or(|(e, _)| err < *e - 1e-12) {
            best = Some((err, Rat::new(p as i64, q as i64)));
        }
    }
    best.map(|(_, r)| r)
}

/// Numerical roots of a complex polynomial (constant term first, nonzero leading term),
/// via companion-matrix eigenvalues polished by Newton steps.
pub fn complex_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if deg == 1 {
        return vec![-monic[0]];
    }
    let mut comp = DMatrix::<Complex64>::zeros(deg, deg);
    for i in 1..deg {
        comp[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..deg {
        comp[(i, deg - 1)] = -monic[i];
    }
    let eig = comp.schur().eigenvalues().map(|v| v.iter().copied().collect::<Vec<_>>());
    let mut roots = eig.unwrap_or_default();
    for r in roots.iter_mut() {
        for _ in 0..8 {
            let (mut f, mut df) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            for c in monic.iter().rev() {
                df = df * *r + f;
                f = f * *r + c;
            }
            if df.norm() == 0.0 {
                break;
            }
            let step = f / df;
            *r -= step;
            if step.norm() < 1e-15 * (1.0 + r.norm()) {
                break;
            }
        }
    }
    roots
}

fn horner(poly: &[CycScalar], x: &CycScalar) -> CycScalar {
    let mut acc = CycScalar::zero();
    for c in poly.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Units `k` of `Z/N` with `k < N/2`: one Galois element per complex-conjugate pair.
fn transversal(n: u32) -> Vec<i64> {
    if n <= 2 {
        return vec![1];
    }
    (1..n as i64)
        .filter(|&k| gcd(k as u64, n as u64) == 1 && 2 * k < n as i64)
        .collect()
}

/// All roots of `poly` (coefficients constant term first) that lie in `Q(ζ_N)`,
/// each verified exactly, sorted by the canonical order.
///
/// A root `λ` of the monic polynomial with coefficients in `(1/D)·Z[ζ_N]` has
/// `Dλ` an algebraic integer, hence integer power-basis coordinates; those are
/// recovered by matching one numerical root per conjugate pair of embeddings.
pub fn roots_in_field(poly: &[CycScalar], n: u32) -> Vec<CycScalar> {
    let n = normalize_conductor(n);
    let deg = poly.len() - 1;
    let lead_inv = poly[deg].inv().expect("leading coefficient is nonzero");
    let monic: Vec<CycScalar> = poly.iter().map(|c| c * &lead_inv).collect();
    let lifted: Vec<Vec<Rat>> = monic.iter().map(|c| c.coeffs_at(n)).collect();
    let d = common_denominator(lifted.iter().flatten());
    let Some(d_f) = d.to_f64() else {
        return Vec::new();
    };
    let d_rat = Rat::from_big(BigRational::from_integer(d));
    let phi = totient(n) as usize;
    let ks = transversal(n);

    let numeric: Vec<Vec<Complex64>> = ks
        .iter()
        .map(|&k| {
            let c: Vec<Complex64> = monic.iter().map(|x| x.lift(n).to_complex_at(k)).collect();
            complex_roots(&c).into_iter().map(|r| r * d_f).collect()
        })
        .collect();

    // real linear system: rows are Re/Im of ζ^{jk}
    let mut m = DMatrix::<f64>::zeros(phi, phi);
    let mut rows = Vec::new();
    for &k in &ks {
        rows.push((k, false));
        if phi > 1 {
            rows.push((k, true));
        }
    }
    for (r, &(k, imag)) in rows.iter().enumerate().take(phi) {
        for j in 0..phi {
            let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / n as f64);
            m[(r, j)] = if imag { w.im } else { w.re };
        }
    }
    let Some(minv) = m.try_inverse() else {
        return Vec::new();
    };

    let mut found: Vec<CycScalar> = Vec::new();
    let mut choice = vec![0usize; ks.len()];
    let counts: Vec<usize> = numeric.iter().map(|v| v.len()).collect();
    if counts.iter().any(|&c| c == 0) {
        return found;
    }
    loop {
        let mut rhs = DVector::<f64>::zeros(phi);
        for (r, &(k, imag)) in rows.iter().enumerate().take(phi) {
            let idx = ks.iter().position(|&x| x == k).unwrap();
            let z = numeric[idx][choice[idx]];
            rhs[r] = if imag { z.im } else { z.re };
        }
        let sol = &minv * rhs;
        let near = sol.iter().all(|x| (x - x.round()).abs() < 1e-3);
        if near {
            let coords: Vec<Rat> = sol
                .iter()
                .map(|x| Rat::from_int(x.round() as i64))
                .collect();
            let mu = CycScalar::from_coeffs(n, coords);
            let lambda = &mu * &CycScalar::from_rat(d_rat.recip());
            if !found.contains(&lambda) && horner(&monic, &lambda).is_zero() {
                found.push(lambda);
                if found.len() == deg {
                    break;
                }
            }
        }
        // advance the mixed-radix counter
        let mut i = 0;
        loop {
            if i == choice.len() {
                found.sort();
                return found;
            }
            choice[i] += 1;
            if choice[i] < counts[i] {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
    found.sort();
    found
}

/// Convenience: coefficient denominators of `x` in its own power basis.
pub fn denominator(x: &CycScalar) -> BigInt {
    let c = x.coeffs();
    if c.is_empty() {
        return BigInt::one();
    }
    let d = common_denominator(c.iter());
    if d.is_zero() {
        BigInt::one()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::interval::embed;

    #[test]
    fn reconstruct_examples() {
        let z = embed(&CycScalar::from_int(-1), 128);
        assert_eq!(reconstruct(&z, 3, 1), Some(CycScalar::from_int(-1)));
        let z = embed(&CycScalar::frac(1, 2), 128);
        assert_eq!(reconstruct(&z, 4, 2), Some(CycScalar::frac(1, 2)));
        let w = CycScalar::zeta(3);
        assert_eq!(reconstruct(&embed(&w, 128), 3, 1), Some(w));
    }

    #[test]
    fn reconstruct_round_trips_small_values() {
        let x = &CycScalar::frac(-3, 4) + &(&CycScalar::zeta(4) * &CycScalar::frac(5, 3));
        assert_eq!(reconstruct(&embed(&x, 128), 4, 12), Some(x));
    }

    #[test]
    fn roots_of_x2_plus_1_over_gaussian_field() {
        let poly = vec![CycScalar::one(), CycScalar::zero(), CycScalar::one()];
        let r = roots_in_field(&poly, 4);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&CycScalar::zeta(4)));
        assert!(roots_in_field(&poly, 3).is_empty());
    }

    #[test]
    fn roots_in_larger_fields() {
        // (x - ζ₈)(x - ζ₈³ / 2)
        let a = CycScalar::zeta(8);
        let b = &CycScalar::zeta_pow(8, 3) * &CycScalar::frac(1, 2);
        let poly = vec![&a * &b, -(&a + &b), CycScalar::one()];
        let r = roots_in_field(&poly, 8);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&a) && r.contains(&b));
        // x^2 - 5 splits in Q(ζ₅)
        let poly = vec![CycScalar::from_int(-5), CycScalar::zero(), CycScalar::one()];
        assert_eq!(roots_in_field(&poly, 5).len(), 2);
    }
}
