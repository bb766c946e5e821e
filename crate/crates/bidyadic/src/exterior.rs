//! Multivectors and multiforms of grades 0..4, with the exterior product,
//! the duality pairing, and the two one-sided contraction products.
//!
//! Vectors and forms are kept as distinct types so that kind errors (wedging
//! a vector with a form, say) are impossible at compile time; grades are
//! runtime data.  The duality pairing follows the determinant convention
//! `pair(α1∧…∧αk, a1∧…∧ak) = det[pair(αi, aj)]`, which on the sorted basis
//! blades reduces to a Kronecker delta: the grade-k form basis is exactly
//! dual to the grade-k vector basis.
//!
//! The two contraction products are fixed, once and for all, by solving the
//! identity
//!
//! ```text
//! a⌋(ν∧Φ) = ν∧(a⌋Φ) + (a|ν)Φ        (vector a, one-form ν, two-form Φ)
//! ```
//!
//! on basis blades.  The solution: the contraction `⌋` inserts its grade-one
//! argument into the *last* slot of the other factor, and the hook `⌊`
//! inserts the right-hand factor into the *first* slots of the left one.
//! Equivalently, both are duality adjoints of the wedge with a fixed
//! argument order and a global `+1` sign:
//!
//! ```text
//! pair(a⌋ω, X) = pair(ω, X∧a)          pair(β, X⌊α) = pair(α∧β, X)
//! ```
//!
//! The derived structure constant `e1⌋ε12 = −ε2` (and its hook counterpart
//! `e12⌊ε1 = +e2`) is frozen in [`crate::convention`] and asserted in tests.

use alloc::vec::Vec;
use core::fmt;

use crate::basis::{self, GRADE_DIMS, MASKS};
use crate::scalar::{Scalar, Zero};
use crate::{Error, Result};

/// Whether a graded value lives in the vector algebra or the form algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Vector,
    Form,
}

impl Kind {
    /// The kind whose elements pair with this one.
    pub fn dual(self) -> Kind {
        match self {
            Kind::Vector => Kind::Form,
            Kind::Form => Kind::Vector,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Vector => write!(f, "E"),
            Kind::Form => write!(f, "F"),
        }
    }
}

fn check_grade(grade: u8) {
    assert!(grade <= 4, "grade must be 0..=4");
}

/// Coordinates of a wedge product on the sorted blade basis (kind-agnostic).
fn wedge_coords(k: u8, x: &[Scalar], l: u8, y: &[Scalar]) -> Result<(u8, Vec<Scalar>)> {
    if k + l > 4 {
        return Err(Error::GradeOverflow { left: k, right: l });
    }
    let out_grade = k + l;
    let mut out = crate::scalar::zeros(GRADE_DIMS[out_grade as usize]);
    for (i, &ma) in MASKS[k as usize].iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        for (j, &mb) in MASKS[l as usize].iter().enumerate() {
            if y[j].is_zero() {
                continue;
            }
            if let Some(sign) = basis::merge_sign(ma, mb) {
                let t = basis::index_in_grade(ma | mb);
                let term = &x[i] * &y[j];
                if sign > 0 {
                    out[t] += term;
                } else {
                    out[t] -= term;
                }
            }
        }
    }
    Ok((out_grade, out))
}

/// Coordinates of a first-slot contraction: remove the grade-`l` blade `a`
/// from the front of the grade-`k` blade `x`; result grade `k − l`.
/// This is the coordinate form of `pair(β, X⌊α) = pair(α∧β, X)`.
fn hook_coords(k: u8, x: &[Scalar], l: u8, a: &[Scalar]) -> Result<(u8, Vec<Scalar>)> {
    if l > k {
        return Err(Error::GradeUnderflow { big: k, small: l });
    }
    let out_grade = k - l;
    let mut out = crate::scalar::zeros(GRADE_DIMS[out_grade as usize]);
    for (t, &mk) in MASKS[out_grade as usize].iter().enumerate() {
        let mut acc = Scalar::zero();
        for (j, &mj) in MASKS[l as usize].iter().enumerate() {
            if a[j].is_zero() {
                continue;
            }
            if let Some(sign) = basis::merge_sign(mj, mk) {
                let xi = &x[basis::index_in_grade(mj | mk)];
                let term = &a[j] * xi;
                if sign > 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        out[t] = acc;
    }
    Ok((out_grade, out))
}

/// Coordinates of a last-slot contraction by a grade-one value:
/// the coordinate form of `pair(a⌋ω, X) = pair(ω, X∧a)`.
fn contract_last_coords(k: u8, x: &[Scalar], a: &[Scalar]) -> Result<(u8, Vec<Scalar>)> {
    if k == 0 {
        return Err(Error::GradeUnderflow { big: 0, small: 1 });
    }
    let out_grade = k - 1;
    let mut out = crate::scalar::zeros(GRADE_DIMS[out_grade as usize]);
    for (t, &mk) in MASKS[out_grade as usize].iter().enumerate() {
        let mut acc = Scalar::zero();
        for (j, &mj) in MASKS[1].iter().enumerate() {
            if a[j].is_zero() {
                continue;
            }
            if let Some(sign) = basis::merge_sign(mk, mj) {
                let xi = &x[basis::index_in_grade(mj | mk)];
                let term = &a[j] * xi;
                if sign > 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        out[t] = acc;
    }
    Ok((out_grade, out))
}

macro_rules! graded_type {
    ($name:ident, $kind:expr, $sym:literal, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq)]
        pub struct $name {
            grade: u8,
            coords: Vec<Scalar>,
        }

        impl $name {
            /// Build from coordinates on the sorted blade basis of `grade`.
            pub fn new(grade: u8, coords: Vec<Scalar>) -> Result<Self> {
                check_grade(grade);
                if coords.len() != GRADE_DIMS[grade as usize] {
                    return Err(Error::GradeMismatch {
                        expected: grade,
                        found: coords.len() as u8,
                    });
                }
                Ok(Self { grade, coords })
            }

            /// The zero value of the given grade.
            pub fn zero(grade: u8) -> Self {
                check_grade(grade);
                Self { grade, coords: crate::scalar::zeros(GRADE_DIMS[grade as usize]) }
            }

            /// The `index`-th basis blade of the given grade.
            pub fn basis(grade: u8, index: usize) -> Self {
                let mut v = Self::zero(grade);
                v.coords[index] = crate::scalar::int(1);
                v
            }

            /// A grade-zero value holding `s`.
            pub fn from_scalar(s: Scalar) -> Self {
                Self { grade: 0, coords: alloc::vec![s] }
            }

            pub fn grade(&self) -> u8 {
                self.grade
            }

            pub fn coords(&self) -> &[Scalar] {
                &self.coords
            }

            pub fn coord(&self, index: usize) -> &Scalar {
                &self.coords[index]
            }

            pub fn is_zero(&self) -> bool {
                self.coords.iter().all(|c| c.is_zero())
            }

            /// The kind of this value (fixed per type).
            pub fn kind(&self) -> Kind {
                $kind
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                if self.grade != other.grade {
                    return Err(Error::GradeMismatch { expected: self.grade, found: other.grade });
                }
                let coords = self
                    .coords
                    .iter()
                    .zip(&other.coords)
                    .map(|(a, b)| a + b)
                    .collect();
                Ok(Self { grade: self.grade, coords })
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                self.add(&other.neg())
            }

            pub fn neg(&self) -> Self {
                Self { grade: self.grade, coords: self.coords.iter().map(|c| -c).collect() }
            }

            pub fn scale(&self, s: &Scalar) -> Self {
                Self { grade: self.grade, coords: self.coords.iter().map(|c| c * s).collect() }
            }

            /// Exterior product with a value of the same kind.
            pub fn wedge(&self, other: &Self) -> Result<Self> {
                let (grade, coords) =
                    wedge_coords(self.grade, &self.coords, other.grade, &other.coords)?;
                Ok(Self { grade, coords })
            }

            /// True if `other = c·self` for some scalar `c`.
            pub fn proportional_to(&self, other: &Self) -> bool {
                if self.grade != other.grade {
                    return false;
                }
                if other.is_zero() {
                    return true;
                }
                if self.is_zero() {
                    return false;
                }
                let pivot = self.coords.iter().position(|c| !c.is_zero()).unwrap();
                if other.coords[pivot].is_zero() {
                    return false;
                }
                let c = &other.coords[pivot] / &self.coords[pivot];
                self.coords
                    .iter()
                    .zip(&other.coords)
                    .all(|(a, b)| &(a * &c) == b)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                for (i, c) in self.coords.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let label = basis::mask_label(MASKS[self.grade as usize][i]);
                    if self.grade == 0 {
                        write!(f, "{c}")?;
                    } else {
                        write!(f, "({c})·{}{}", $sym, label)?;
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    };
}

graded_type!(
    MultiVector,
    Kind::Vector,
    "e",
    "A multivector of fixed grade 0..4 with exact rational coordinates."
);
graded_type!(
    MultiForm,
    Kind::Form,
    "ε",
    "A multiform of fixed grade 0..4 with exact rational coordinates."
);

impl MultiVector {
    /// Duality pairing with a form of the same grade (determinant
    /// convention; Kronecker on sorted basis blades).
    pub fn pair(&self, form: &MultiForm) -> Result<Scalar> {
        form.pair(self)
    }

    /// Contraction `self ⌋ ω` of a grade-one vector into the last slot of a
    /// form: `pair(a⌋ω, X) = pair(ω, X∧a)`.
    pub fn contract(&self, form: &MultiForm) -> Result<MultiForm> {
        if self.grade != 1 {
            return Err(Error::GradeMismatch { expected: 1, found: self.grade });
        }
        let (grade, coords) = contract_last_coords(form.grade(), form.coords(), &self.coords)?;
        MultiForm::new(grade, coords)
    }

    /// Hook `self ⌊ α`: remove the form `α` from the first slots of this
    /// multivector: `pair(β, X⌊α) = pair(α∧β, X)`.
    pub fn hook(&self, form: &MultiForm) -> Result<MultiVector> {
        let (grade, coords) =
            hook_coords(self.grade, &self.coords, form.grade(), form.coords())?;
        MultiVector::new(grade, coords)
    }

    /// Complement form `ε_N ⌊ self`, a grade `4−k` form.
    pub fn complement(&self) -> MultiForm {
        eps_n().hook_vec(self).expect("grade 4 hooks any grade")
    }
}

impl MultiForm {
    /// Duality pairing with a vector of the same grade.
    pub fn pair(&self, x: &MultiVector) -> Result<Scalar> {
        if self.grade != x.grade() {
            return Err(Error::GradeMismatch { expected: self.grade, found: x.grade() });
        }
        let mut acc = Scalar::zero();
        for (a, b) in self.coords.iter().zip(x.coords()) {
            acc += a * b;
        }
        Ok(acc)
    }

    /// Contraction `self ⌋ X` of a grade-one form into the last slot of a
    /// multivector: `pair(β, α⌋X) = pair(β∧α, X)`.
    pub fn contract(&self, x: &MultiVector) -> Result<MultiVector> {
        if self.grade != 1 {
            return Err(Error::GradeMismatch { expected: 1, found: self.grade });
        }
        let (grade, coords) = contract_last_coords(x.grade(), x.coords(), &self.coords)?;
        MultiVector::new(grade, coords)
    }

    /// Hook `self ⌊ a`: remove the multivector `a` from the first slots of
    /// this form: `pair(ω⌊a, Y) = pair(ω, a∧Y)`.
    pub fn hook_vec(&self, a: &MultiVector) -> Result<MultiForm> {
        let (grade, coords) = hook_coords(self.grade, &self.coords, a.grade(), a.coords())?;
        MultiForm::new(grade, coords)
    }

    /// Complement vector `e_N ⌊ self`, a grade `4−k` multivector.
    pub fn complement(&self) -> MultiVector {
        en().hook(self).expect("grade 4 hooks any grade")
    }
}

/// The unit quadrivector `e_N = e1∧e2∧e3∧e4`.
pub fn en() -> MultiVector {
    MultiVector::basis(4, 0)
}

/// The unit four-form `ε_N = ε1∧ε2∧ε3∧ε4`, dual to `e_N`.
pub fn eps_n() -> MultiForm {
    MultiForm::basis(4, 0)
}

/// The `i`-th basis vector (0-based index; `basis_vector(0)` is `e1`).
pub fn basis_vector(i: usize) -> MultiVector {
    MultiVector::basis(1, i)
}

/// The `i`-th basis one-form (0-based; `basis_oneform(0)` is `ε1`).
pub fn basis_oneform(i: usize) -> MultiForm {
    MultiForm::basis(1, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn form2(c: [i64; 6]) -> MultiForm {
        MultiForm::new(2, c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn wedge_basis_examples() {
        let e1 = basis_oneform(0);
        let e2 = basis_oneform(1);
        let w = e1.wedge(&e2).unwrap();
        assert_eq!(w, MultiForm::basis(2, 0)); // ε12
        let w2 = e2.wedge(&e1).unwrap();
        assert_eq!(w2, MultiForm::basis(2, 0).neg());
        assert!(e1.wedge(&e1).unwrap().is_zero());
    }

    #[test]
    fn wedge_grade_overflow_errors() {
        let top = eps_n();
        let one = basis_oneform(0);
        assert!(matches!(top.wedge(&one), Err(Error::GradeOverflow { .. })));
    }

    #[test]
    fn pairing_is_kronecker_on_basis() {
        for k in 0..=4u8 {
            for i in 0..GRADE_DIMS[k as usize] {
                for j in 0..GRADE_DIMS[k as usize] {
                    let p = MultiForm::basis(k, i).pair(&MultiVector::basis(k, j)).unwrap();
                    assert_eq!(p, int((i == j) as i64));
                }
            }
        }
    }

    #[test]
    fn contraction_structure_constant() {
        // e1 ⌋ ε12 = -ε2: the sign fixed by the normative identity.
        let a = basis_vector(0);
        let w = MultiForm::basis(2, 0); // ε12
        let r = a.contract(&w).unwrap();
        assert_eq!(r, basis_oneform(1).neg());
        // e1 ⌋ ε1 = 1
        let r = basis_vector(0).contract(&basis_oneform(0)).unwrap();
        assert_eq!(r, MultiForm::from_scalar(int(1)));
        // e3 ⌋ ε12 = 0
        assert!(basis_vector(2).contract(&MultiForm::basis(2, 0)).unwrap().is_zero());
    }

    #[test]
    fn normative_contraction_identity_on_a_case() {
        // a⌋(ν∧Φ) = ν∧(a⌋Φ) + (a|ν)Φ, checked here on one non-trivial case;
        // the property test covers 1000 random triples.
        let a = basis_vector(1); // e2
        let nu = basis_oneform(0); // ε1
        let phi = form2([1, 0, 0, 2, 0, 0]); // ε12 + 2ε23
        let lhs = a.contract(&nu.wedge(&phi).unwrap()).unwrap();
        let rhs = nu
            .wedge(&a.contract(&phi).unwrap())
            .unwrap()
            .add(&phi.scale(&nu.pair(&a).unwrap()))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hook_first_slot_examples() {
        // e12 ⌊ ε1 = e2 (first-slot removal, sign +1)
        let x = MultiVector::basis(2, 0);
        let r = x.hook(&basis_oneform(0)).unwrap();
        assert_eq!(r, basis_vector(1));
        // e12 ⌊ ε2 = -e1
        let r = x.hook(&basis_oneform(1)).unwrap();
        assert_eq!(r, basis_vector(0).neg());
        // e_N ⌊ ε12 = e34, e_N ⌊ ε13 = -e24
        assert_eq!(en().hook(&MultiForm::basis(2, 0)).unwrap(), MultiVector::basis(2, 5));
        assert_eq!(
            en().hook(&MultiForm::basis(2, 1)).unwrap(),
            MultiVector::basis(2, 4).neg()
        );
        // e_N ⌊ ε_N = 1
        assert_eq!(en().hook(&eps_n()).unwrap(), MultiVector::from_scalar(int(1)));
    }

    #[test]
    fn hook_grade_underflow_errors() {
        let x = MultiVector::basis(1, 0);
        let a = MultiForm::basis(2, 0);
        assert!(matches!(x.hook(&a), Err(Error::GradeUnderflow { .. })));
    }

    #[test]
    fn complement_roundtrip_matches_published_signs() {
        for k in 0..=4u8 {
            for i in 0..GRADE_DIMS[k as usize] {
                let w = MultiForm::basis(k, i);
                let back = w.complement().complement();
                let sign = basis::complement_roundtrip_sign(k);
                let expected = if sign > 0 { w.clone() } else { w.neg() };
                assert_eq!(back, expected);
            }
        }
    }

    #[test]
    fn display_renders_blades() {
        let w = form2([1, 0, 0, -2, 0, 0]);
        assert_eq!(alloc::format!("{w}"), "(1)·ε12 + (-2)·ε23");
        assert_eq!(alloc::format!("{}", MultiForm::zero(2)), "0");
    }
}
