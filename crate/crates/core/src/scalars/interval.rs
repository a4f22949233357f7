//! Certified complex embeddings with rational interval endpoints.
//!
//! Every endpoint is a dyadic rational rounded outward, so results are
//! rigorous enclosures; they are only ever used for inequality checks and as
//! starting data for exact reconstruction.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CycScalar;

/// A closed real interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.floor().to_integer(), scale)
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = x * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.ceil().to_integer(), scale)
}

impl Interval {
    pub fn point(x: BigRational) -> Interval {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Interval {
        Interval::point(BigRational::zero())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// Widens the endpoints outward to multiples of `2^-bits`.
    pub fn round(&self, bits: u32) -> Interval {
        Interval {
            lo: round_down(&self.lo, bits),
            hi: round_up(&self.hi, bits),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if c.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    pub fn square(&self) -> Interval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.lo.is_negative() && self.hi.is_positive() {
            Interval {
                lo: BigRational::zero(),
                hi: a.max(b),
            }
        } else if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.mid().to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let p = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        Interval { lo, hi }
    }
}

/// A rectangle in the complex plane.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn zero() -> ComplexInterval {
        ComplexInterval {
            re: Interval::zero(),
            im: Interval::zero(),
        }
    }

    pub fn round(&self, bits: u32) -> ComplexInterval {
        ComplexInterval {
            re: self.re.round(bits),
            im: self.im.round(bits),
        }
    }

    /// Enclosure of `|z|²`.
    pub fn norm_sqr(&self) -> Interval {
        &self.re.square() + &self.im.square()
    }

    pub fn scale(&self, c: &BigRational) -> ComplexInterval {
        ComplexInterval {
            re: self.re.scale(c),
            im: self.im.scale(c),
        }
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for &ComplexInterval {
    type Output = ComplexInterval;
    fn add(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Mul for &ComplexInterval {
    type Output = ComplexInterval;
    fn mul(self, rhs: &ComplexInterval) -> ComplexInterval {
        ComplexInterval {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

/// Bracket of `atan(1/x)` from the alternating series, to within `2^-bits`.
fn atan_inv(x: u64, bits: u32) -> Interval {
    let x2 = BigInt::from(x) * BigInt::from(x);
    let tol = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let mut power = BigInt::from(x);
    let mut sum = BigRational::zero();
    let mut k: u64 = 0;
    loop {
        let term = BigRational::new(BigInt::one(), &power * BigInt::from(2 * k + 1));
        let next = if k % 2 == 0 { &sum + &term } else { &sum - &term };
        if term < tol {
            // partial sums of an alternating decreasing series bracket the limit
            let (lo, hi) = if sum <= next { (sum, next) } else { (next, sum) };
            return Interval { lo, hi };
        }
        sum = next;
        power *= &x2;
        k += 1;
    }
}

/// Enclosure of π via Machin's formula.
pub fn pi(bits: u32) -> Interval {
    let a = atan_inv(5, bits + 8).scale(&BigRational::from_integer(16.into()));
    let b = atan_inv(239, bits + 8).scale(&BigRational::from_integer(4.into()));
    (&a - &b).round(bits + 4)
}

/// Enclosures of `cos θ` and `sin θ` for `θ ∈ [0, 4]`, by Taylor series with remainder.
fn cos_sin(theta: &Interval, bits: u32) -> (Interval, Interval) {
    let tol = BigRational::new(BigInt::one(), BigInt::one() << bits);
    let hi = theta.hi.clone();
    let mut cos = Interval::zero();
    let mut sin = Interval::zero();
    // term_m encloses θ^m / m!
    let mut term = Interval::point(BigRational::one());
    let mut bound = BigRational::one();
    let mut m: u64 = 0;
    loop {
        let signed = if (m / 2) % 2 == 0 { term.clone() } else { -&term };
        if m % 2 == 0 {
            cos = &cos + &signed;
        } else {
            sin = &sin + &signed;
        }
        m += 1;
        let denom = BigRational::from_integer(BigInt::from(m));
        term = (&term * theta).scale(&(BigRational::one() / &denom)).round(bits + 16);
        bound = &bound * &hi / &denom;
        if m > 4 && bound < tol {
            // remaining tail of each series is bounded by the next term magnitude
            let r = Interval {
                lo: -&bound,
                hi: bound.clone(),
            };
            return ((&cos + &r).round(bits), (&sin + &r).round(bits));
        }
    }
}

/// Enclosure of `e^{2πi k/n}`.
pub fn root_of_unity(n: u32, k: i64, bits: u32) -> ComplexInterval {
    let k = k.rem_euclid(n as i64) as u64;
    let n64 = n as u64;
    if k == 0 {
        return ComplexInterval {
            re: Interval::point(BigRational::one()),
            im: Interval::zero(),
        };
    }
    // reduce to an angle in [0, π/2] via symmetries, then undo
    let g = k.gcd(&n64);
    let (k, n64) = (k / g, n64 / g);
    let work = bits + 24;
    let (quadrant_k, flip_im) = if 2 * k > n64 { (n64 - k, true) } else { (k, false) };
    // angle = 2π·quadrant_k/n64 ∈ (0, π]
    let (reflect, kk) = if 4 * quadrant_k > n64 {
        // π − angle
        (true, n64 - 2 * quadrant_k)
    } else {
        (false, 2 * quadrant_k)
    };
    // angle' = π·kk/n64 ∈ [0, π/2]
    let p = pi(work);
    let theta = p.scale(&BigRational::new(BigInt::from(kk), BigInt::from(n64)));
    let (c, s) = cos_sin(&theta, work);
    let c = if reflect { -&c } else { c };
    let s = if flip_im { -&s } else { s };
    ComplexInterval { re: c, im: s }.round(bits + 8)
}

/// Certified enclosure of the image of `a` under `ζ_N ↦ e^{2πi k/N}`.
pub fn embed_at(a: &CycScalar, k: i64, bits: u32) -> ComplexInterval {
    let n = a.conductor();
    let mut acc = ComplexInterval::zero();
    for (j, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let z = root_of_unity(n, j as i64 * k, bits + 8);
        acc = &acc + &z.scale(&c.to_big());
    }
    acc.round(bits)
}

/// Certified enclosure of the image of `a` under `ζ_N ↦ e^{2πi/N}`.
pub fn embed(a: &CycScalar, bits: u32) -> ComplexInterval {
    assert!(bits >= 64, "precision below 64 bits");
    embed_at(a, 1, bits)
}

/// Decides `|σ(a)| ≤ b` for a nonnegative rational `b`; `true` means the
/// certified enclosure does not rule the inequality out.
pub fn abs_at_most(a: &CycScalar, k: i64, b: &BigRational, bits: u32) -> bool {
    let z = embed_at(a, k, bits);
    z.norm_sqr().lo <= b * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pi_brackets() {
        let p = pi(100);
        assert!(p.lo > q(3141592653589793, 1000000000000000));
        assert!(p.hi < q(3141592653589794, 1000000000000000));
    }

    #[test]
    fn embedding_examples() {
        let one = embed(&CycScalar::one(), 64);
        assert!(one.re.contains(&q(1, 1)) && one.im.contains(&q(0, 1)));
        let i = embed(&CycScalar::zeta(4), 64);
        assert!(i.re.contains(&q(0, 1)) && i.im.contains(&q(1, 1)));
        let w = embed(&CycScalar::zeta(3), 128);
        assert!(w.re.contains(&q(-1, 2)));
        assert!(w.im.lo > q(8660254037, 10000000000) && w.im.hi < q(8660254038, 10000000000));
        assert!(w.re.width() < q(1, 1 << 60));
    }

    #[test]
    fn abs_bound() {
        let z = &CycScalar::zeta(5) + &CycScalar::zeta_pow(5, 4);
        for k in [1, 2] {
            assert!(abs_at_most(&z, k, &q(2, 1), 128));
        }
        assert!(!abs_at_most(&CycScalar::from_int(3), 1, &q(2, 1), 128));
    }
}
