//! Exact univariate polynomials over the rational scalars.
//!
//! The degrees in this crate are tiny (≤ 4 for dispersion quartics along a
//! ray, ≤ 3 for minor polynomials in the rank-drop search), so everything is
//! done with dense coefficient vectors and plain rational arithmetic.
//!
//! Real roots are located with Sturm sequences: [`QPoly::real_root_locations`]
//! returns exact rational roots found along the way plus isolating brackets
//! each holding exactly one simple real root.  Rational roots are then
//! recovered *without factoring integers*: by the rational-root bound the
//! denominator of any rational root divides the leading coefficient of the
//! primitive integer form, two distinct rationals with denominator ≤ D are
//! at least 1/D² apart, so bisecting a bracket below that width and taking
//! the simplest rational in the bracket (Stern–Brocot descent) either
//! produces the root or a witness that the root is irrational.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{int, ratio, Scalar};

/// Dense univariate polynomial, coefficients in ascending degree order with
/// no trailing zeros (the zero polynomial has an empty vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Scalar>,
}

/// Location of one real root: either an exact rational value or an open
/// bracket `(lo, hi)` containing exactly one simple root, with nonzero
/// polynomial values at both ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLoc {
    Exact(Scalar),
    Bracket(Scalar, Scalar),
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> QPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> QPoly {
        QPoly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// The monomial `x`.
    pub fn x() -> QPoly {
        QPoly::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = crate::scalar::zeros(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly::new(out)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> QPoly {
        if s.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = crate::scalar::zeros(self.coeffs.len() + other.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * int(i as i64 + 1))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divmod(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = crate::scalar::zeros(rem.len() - ddeg);
        for k in (ddeg..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &dlead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let delta = &q * d;
                rem[k - ddeg + i] -= delta;
            }
            quot[k - ddeg] = q;
        }
        (QPoly::new(quot), QPoly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => {
                let inv = Scalar::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// The square-free part `p / gcd(p, p′)` (same real roots, all simple).
    pub fn square_free_part(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.divmod(&g).0
    }

    /// Coefficients of the primitive integer form (denominators cleared,
    /// content divided out, leading coefficient positive).
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &Scalar::from(lcm.clone())).to_integer()).collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().map(|c| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        for c in &mut ints {
            *c /= &content;
        }
        ints
    }

    /// Strict bound `B` with every real root in `(−B, B)`.
    pub fn root_bound(&self) -> Scalar {
        let lead = self.leading().expect("root bound of the zero polynomial");
        let mut max = Scalar::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = (c / lead).abs();
            if r > max {
                max = r;
            }
        }
        max + Scalar::one()
    }

    fn sturm_chain(&self) -> Vec<QPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                return chain;
            }
            let (_, r) = chain[n - 2].divmod(&chain[n - 1]);
            if r.is_zero() {
                return chain;
            }
            chain.push(r.neg());
        }
    }

    fn sign_changes(chain: &[QPoly], x: &Scalar) -> usize {
        let mut changes = 0;
        let mut last = 0i8;
        for p in chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Locations of all distinct real roots (multiplicity discarded).
    pub fn real_root_locations(&self) -> Vec<RootLoc> {
        let mut p = self.square_free_part();
        let mut exact: Vec<Scalar> = Vec::new();
        let brackets = 'restart: loop {
            if p.degree().map_or(true, |d| d == 0) {
                break Vec::new();
            }
            // Deflate linear factors directly.
            if p.degree() == Some(1) {
                exact.push(-(&p.coeffs[0] / &p.coeffs[1]));
                break Vec::new();
            }
            let chain = p.sturm_chain();
            let bound = p.root_bound();
            let lo = -&bound;
            let v_lo = Self::sign_changes(&chain, &lo);
            let v_hi = Self::sign_changes(&chain, &bound);
            let mut stack = vec![(lo, bound.clone(), v_lo, v_hi)];
            let mut found = Vec::new();
            while let Some((lo, hi, vl, vh)) = stack.pop() {
                let count = vl - vh;
                if count == 0 {
                    continue;
                }
                if count == 1 {
                    found.push((lo, hi));
                    continue;
                }
                let mid = (&lo + &hi) * ratio(1, 2);
                if p.eval(&mid).is_zero() {
                    exact.push(mid.clone());
                    let linear = QPoly::new(vec![-mid, Scalar::one()]);
                    p = p.divmod(&linear).0;
                    continue 'restart;
                }
                let vm = Self::sign_changes(&chain, &mid);
                stack.push((lo, mid.clone(), vl, vm));
                stack.push((mid, hi, vm, vh));
            }
            break found;
        };
        let mut out: Vec<RootLoc> = exact.into_iter().map(RootLoc::Exact).collect();
        out.extend(brackets.into_iter().map(|(lo, hi)| RootLoc::Bracket(lo, hi)));
        out.sort_by(|a, b| root_key(a).cmp(root_key(b)));
        out
    }

    /// All rational roots, exactly, in increasing order.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        let locations = self.real_root_locations();
        if locations.is_empty() {
            return Vec::new();
        }
        let sf = self.square_free_part();
        let denom_bound = Scalar::from(
            sf.primitive_integer_coeffs().last().cloned().unwrap_or_else(BigInt::one),
        )
        .abs();
        // Two rationals with denominators ≤ D differ by at least 1/D².
        let width_target = Scalar::one() / (&denom_bound * &denom_bound * int(2));
        let mut roots = Vec::new();
        for loc in locations {
            match loc {
                RootLoc::Exact(r) => roots.push(r),
                RootLoc::Bracket(mut lo, mut hi) => {
                    let mut landed = false;
                    while &hi - &lo >= width_target {
                        let mid = (&lo + &hi) * ratio(1, 2);
                        let v = sf.eval(&mid);
                        if v.is_zero() {
                            roots.push(mid);
                            landed = true;
                            break;
                        }
                        // The bracket ends carry opposite signs (one simple
                        // root inside), so keep the sign-change half.
                        if (sf.eval(&lo).is_positive()) == (v.is_positive()) {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    if !landed {
                        let cand = simplest_in_interval(&lo, &hi);
                        if sf.eval(&cand).is_zero() {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Floating-point approximations of all distinct real roots, refined
    /// exactly until well below double precision, in increasing order.
    pub fn real_roots_f64(&self) -> Vec<f64> {
        let mut out = Vec::new();
        let sf = self.square_free_part();
        for loc in self.real_root_locations() {
            match loc {
                RootLoc::Exact(r) => out.push(to_f64(&r)),
                RootLoc::Bracket(mut lo, mut hi) => {
                    let scale = hi.abs().max(lo.abs()) + Scalar::one();
                    let target = scale * ratio(1, 1_000_000_000_000_000);
                    let mut landed = false;
                    while &hi - &lo > target {
                        let mid = (&lo + &hi) * ratio(1, 2);
                        let v = sf.eval(&mid);
                        if v.is_zero() {
                            out.push(to_f64(&mid));
                            landed = true;
                            break;
                        }
                        if (sf.eval(&lo).is_positive()) == (v.is_positive()) {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    if !landed {
                        out.push(to_f64(&((&lo + &hi) * ratio(1, 2))));
                    }
                }
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }

    /// Unique interpolating polynomial through `points` (distinct abscissae).
    pub fn interpolate(points: &[(Scalar, Scalar)]) -> QPoly {
        let mut acc = QPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut term = QPoly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = xi - xj;
                let factor = QPoly::new(vec![-xj / &denom, Scalar::one() / &denom]);
                term = term.mul(&factor);
            }
            acc = acc.add(&term);
        }
        acc
    }
}

fn root_key(loc: &RootLoc) -> &Scalar {
    match loc {
        RootLoc::Exact(r) => r,
        RootLoc::Bracket(lo, _) => lo,
    }
}

fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().expect("rational converts to f64")
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (ties broken deterministically by the Stern–Brocot descent).
pub fn simplest_in_interval(lo: &Scalar, hi: &Scalar) -> Scalar {
    assert!(lo <= hi, "empty interval");
    let floor_lo = lo.floor();
    // An integer in the interval is simplest (smallest such integer).
    let candidate = if lo == &floor_lo { floor_lo.clone() } else { &floor_lo + Scalar::one() };
    if &candidate <= hi {
        return candidate;
    }
    // Now floor(lo) = floor(hi) and neither endpoint is an integer:
    // recurse on the reciprocal of the fractional parts.
    let frac_lo = lo - &floor_lo;
    let frac_hi = hi - &floor_lo;
    let inner = simplest_in_interval(&(Scalar::one() / frac_hi), &(Scalar::one() / frac_lo));
    floor_lo + Scalar::one() / inner
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = poly(&[1, 2, 1]); // (x+1)^2
        assert_eq!(p.eval(&int(3)), int(16));
        assert_eq!(p.derivative(), poly(&[2, 2]));
        let q = poly(&[-1, 1]);
        assert_eq!(q.mul(&q), poly(&[1, -2, 1]));
        let (quo, rem) = p.divmod(&poly(&[1, 1]));
        assert_eq!(quo, poly(&[1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn gcd_and_square_free() {
        let p = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[2, 1]));
        let g = p.gcd(&p.derivative());
        assert_eq!(g, poly(&[-1, 1]));
        let sf = p.square_free_part();
        assert_eq!(sf.degree(), Some(2));
        assert!(sf.eval(&int(1)).is_zero());
        assert!(sf.eval(&int(-2)).is_zero());
    }

    #[test]
    fn rational_roots_of_integer_polynomial() {
        // (x - 1)(2x + 1)(3x + 2): roots 1, -1/2, -2/3
        let p = poly(&[-1, 1]).mul(&poly(&[1, 2])).mul(&poly(&[2, 3]));
        let roots = p.rational_roots();
        assert_eq!(roots, vec![ratio(-2, 3), ratio(-1, 2), int(1)]);
    }

    #[test]
    fn irrational_roots_are_not_reported_as_rational() {
        let p = poly(&[-2, 0, 1]); // x^2 - 2
        assert!(p.rational_roots().is_empty());
        let f = p.real_roots_f64();
        assert_eq!(f.len(), 2);
        assert!((f[1] - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn repeated_roots_are_located_once() {
        let p = poly(&[1, 1]).mul(&poly(&[1, 1])).mul(&poly(&[-3, 1]));
        let roots = p.rational_roots();
        assert_eq!(roots, vec![int(-1), int(3)]);
    }

    #[test]
    fn mixed_rational_and_irrational() {
        // (x - 1/3)(x^2 - 3)
        let p = QPoly::new(vec![ratio(-1, 3), Scalar::one()]).mul(&poly(&[-3, 0, 1]));
        assert_eq!(p.rational_roots(), vec![ratio(1, 3)]);
        assert_eq!(p.real_roots_f64().len(), 3);
    }

    #[test]
    fn simplest_rational_descent() {
        assert_eq!(simplest_in_interval(&ratio(31, 100), &ratio(35, 100)), ratio(1, 3));
        assert_eq!(simplest_in_interval(&ratio(-1, 2), &ratio(1, 2)), int(0));
        assert_eq!(simplest_in_interval(&ratio(7, 2), &ratio(7, 2)), ratio(7, 2));
        assert_eq!(simplest_in_interval(&ratio(201, 100), &ratio(299, 100)), ratio(5, 2));
    }

    #[test]
    fn interpolation_reconstructs_coefficients() {
        let p = poly(&[3, -2, 0, 1, 4]);
        let pts: Vec<(Scalar, Scalar)> =
            (-2..=2).map(|t| (int(t), p.eval(&int(t)))).collect();
        assert_eq!(QPoly::interpolate(&pts), p);
    }
}
