//! Seeded, deterministic random instances of every medium family.
//!
//! The generator is a tiny SplitMix64 stream so that a seed pins the exact
//! corpus forever — reproducibility across library versions is part of the
//! contract here (fixtures and reports are compared bit-for-bit), which
//! rules out PRNGs whose streams may change between releases.
//!
//! Samplers resample until the advertised structural constraints hold (full
//! rank where inversion is promised, independence of the two-form pair,
//! nonzero self-wedge for the antisymmetric family, …), so every returned
//! recipe is a valid instance of its family, not merely a candidate.

use alloc::vec::Vec;

use crate::dyadic::{Dyadic, Space};
use crate::exterior::{MultiForm, MultiVector};
use crate::linalg::Mat;
use crate::media::{build, MediumRecipe};
use crate::scalar::{int, Scalar, Zero};

/// Deterministic SplitMix64 stream.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// Uniform nonzero integer in `lo..=hi` (the range must contain one).
    pub fn nonzero_int_in(&mut self, lo: i64, hi: i64) -> i64 {
        loop {
            let x = self.int_in(lo, hi);
            if x != 0 {
                return x;
            }
        }
    }

    pub fn scalar_in(&mut self, lo: i64, hi: i64) -> Scalar {
        int(self.int_in(lo, hi))
    }

    pub fn nonzero_scalar_in(&mut self, lo: i64, hi: i64) -> Scalar {
        int(self.nonzero_int_in(lo, hi))
    }

    /// `+1` or `−1`.
    pub fn sign(&mut self) -> Scalar {
        if self.next_u64() & 1 == 0 {
            int(1)
        } else {
            int(-1)
        }
    }
}

const ENTRY_RANGE: (i64, i64) = (-3, 3);
const RESAMPLE_LIMIT: usize = 10_000;

fn small_mat(rng: &mut Rng, rows: usize, cols: usize) -> Mat {
    let mut m = Mat::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = rng.scalar_in(ENTRY_RANGE.0, ENTRY_RANGE.1);
        }
    }
    m
}

fn small_coords(rng: &mut Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| rng.scalar_in(ENTRY_RANGE.0, ENTRY_RANGE.1)).collect()
}

/// Random bivector with small integer coordinates (may be zero).
pub fn random_bivector(rng: &mut Rng) -> MultiVector {
    MultiVector::new(2, small_coords(rng, 6)).expect("six coordinates")
}

/// Random two-form with small integer coordinates (may be zero).
pub fn random_twoform(rng: &mut Rng) -> MultiForm {
    MultiForm::new(2, small_coords(rng, 6)).expect("six coordinates")
}

/// Random nonzero one-form with small integer coordinates.
pub fn random_oneform(rng: &mut Rng) -> MultiForm {
    for _ in 0..RESAMPLE_LIMIT {
        let nu = MultiForm::new(1, small_coords(rng, 4)).expect("four coordinates");
        if !nu.is_zero() {
            return nu;
        }
    }
    unreachable!("a nonzero one-form appears almost surely");
}

/// Random grade-1 map on vectors with small integer entries.
pub fn random_vector_map(rng: &mut Rng) -> Dyadic {
    Dyadic::new(Space::vectors(1), Space::vectors(1), small_mat(rng, 4, 4))
        .expect("4×4 grade-1 map")
}

/// Random *invertible* grade-1 map on vectors — the affine transformations
/// of the closure tests.
pub fn random_affine(rng: &mut Rng) -> Dyadic {
    for _ in 0..RESAMPLE_LIMIT {
        let a = random_vector_map(rng);
        if a.rank() == 4 {
            return a;
        }
    }
    unreachable!("a full-rank 4×4 matrix appears almost surely");
}

fn random_traceless_vector_map(rng: &mut Rng) -> Dyadic {
    // The last diagonal entry cancels the trace (the canonical skewon
    // parameterization needs a trace-free map).
    let mut m = small_mat(rng, 4, 4);
    m[(3, 3)] = -(&m[(0, 0)] + &m[(1, 1)] + &m[(2, 2)]);
    Dyadic::new(Space::vectors(1), Space::vectors(1), m).expect("4×4 grade-1 map")
}

fn random_invertible_vector_map(rng: &mut Rng) -> Dyadic {
    random_affine(rng)
}

/// Random dense constitutive map (6×6, small integers, unconstrained).
pub fn random_dense(rng: &mut Rng) -> Dyadic {
    Dyadic::new(Space::forms(2), Space::forms(2), small_mat(rng, 6, 6))
        .expect("6×6 constitutive map")
}

/// Random *invertible* dense constitutive map.
pub fn random_invertible_constitutive(rng: &mut Rng) -> Dyadic {
    for _ in 0..RESAMPLE_LIMIT {
        let m = random_dense(rng);
        if m.rank() == 6 {
            return m;
        }
    }
    unreachable!("a full-rank 6×6 matrix appears almost surely");
}

/// The medium families the corpus can sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Axion,
    Skewon,
    SkewonAxion,
    PMedium,
    PAxion,
    SpecialPAxion,
    Compound,
    RankTwo,
    QMedium,
    QAntisym,
    Dense,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Axion,
        Family::Skewon,
        Family::SkewonAxion,
        Family::PMedium,
        Family::PAxion,
        Family::SpecialPAxion,
        Family::Compound,
        Family::RankTwo,
        Family::QMedium,
        Family::QAntisym,
        Family::Dense,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Family::Axion => "axion",
            Family::Skewon => "skewon",
            Family::SkewonAxion => "skewon-axion",
            Family::PMedium => "p-medium",
            Family::PAxion => "p-axion",
            Family::SpecialPAxion => "special-p-axion",
            Family::Compound => "compound",
            Family::RankTwo => "rank-two",
            Family::QMedium => "q-medium",
            Family::QAntisym => "q-antisym",
            Family::Dense => "dense",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.label() == s)
    }
}

/// Draw one recipe of the given family.  Structural guarantees per family:
///
/// * `Axion`, `SkewonAxion`: nonzero `α`; `Skewon` is the `α = 0` row, with
///   an invertible result.
/// * `PMedium` / `PAxion` / `SpecialPAxion`: full-rank grade-1 map, nonzero
///   scale; `PAxion` additionally keeps `α² ≠ scale²·det(P)` so the general
///   and special sub-families stay distinct; `SpecialPAxion` builds
///   `P = G∘G` and pins `α = ±scale·det(G)` exactly.
/// * `Compound`: nonzero square coefficient (the quadratic genuinely enters).
/// * `RankTwo`: independent two-forms, nonzero `α`, nonzero inversion
///   determinant — the closed-form inverse always exists.
/// * `QMedium`: `Q = S + A` with full-rank symmetric `S` and `det(Q) ≠ 0`.
/// * `QAntisym`: bivector with nonzero self-wedge (full rank), nonzero scale.
/// * `Dense`: a raw matrix, unconstrained.
pub fn sample_recipe(family: Family, rng: &mut Rng) -> MediumRecipe {
    for _ in 0..RESAMPLE_LIMIT {
        if let Some(recipe) = try_sample(family, rng) {
            return recipe;
        }
    }
    unreachable!("resampling bound hit for family {}", family.label())
}

fn try_sample(family: Family, rng: &mut Rng) -> Option<MediumRecipe> {
    let recipe = match family {
        Family::Axion => MediumRecipe::Axion { alpha: rng.nonzero_scalar_in(-3, 3) },
        Family::Skewon => MediumRecipe::SkewonAxion {
            b: random_traceless_vector_map(rng),
            alpha: int(0),
        },
        Family::SkewonAxion => MediumRecipe::SkewonAxion {
            b: random_traceless_vector_map(rng),
            alpha: rng.nonzero_scalar_in(-3, 3),
        },
        Family::PMedium => MediumRecipe::PAxion {
            p: random_invertible_vector_map(rng),
            scale: rng.nonzero_scalar_in(-3, 3),
            alpha: int(0),
        },
        Family::PAxion => {
            let p = random_invertible_vector_map(rng);
            let scale = rng.nonzero_scalar_in(-3, 3);
            let alpha = rng.nonzero_scalar_in(-3, 3);
            let p_scalar = &scale * &scale * p.mat().det().expect("square");
            if &alpha * &alpha == p_scalar {
                return None; // that would be the special sub-family
            }
            MediumRecipe::PAxion { p, scale, alpha }
        }
        Family::SpecialPAxion => {
            let g = random_invertible_vector_map(rng);
            let scale = rng.nonzero_scalar_in(-3, 3);
            let alpha = rng.sign() * &scale * g.mat().det().expect("square");
            MediumRecipe::PAxion {
                p: g.compose(&g).expect("grade-1 composition"),
                scale,
                alpha,
            }
        }
        Family::Compound => MediumRecipe::CompoundPolynomial {
            b: random_vector_map(rng),
            square: rng.nonzero_scalar_in(-3, 3),
            mixed: rng.scalar_in(-3, 3),
            unit: rng.scalar_in(-3, 3),
        },
        Family::RankTwo => {
            let pi = random_twoform(rng);
            let lambda = random_twoform(rng);
            if pi.is_zero() || pi.proportional_to(&lambda) || lambda.proportional_to(&pi) {
                return None;
            }
            let c = random_bivector(rng);
            let d = random_bivector(rng);
            let alpha = rng.nonzero_scalar_in(-3, 3);
            let det = (&pi.pair(&c).expect("grade-2 pairing") + &alpha)
                * (&lambda.pair(&d).expect("grade-2 pairing") + &alpha)
                - lambda.pair(&c).expect("grade-2 pairing")
                    * pi.pair(&d).expect("grade-2 pairing");
            if det.is_zero() {
                return None;
            }
            MediumRecipe::RankTwo { pi, lambda, c, d, alpha }
        }
        Family::QMedium => {
            let mut s = small_mat(rng, 4, 4);
            for i in 0..4 {
                for j in 0..i {
                    s[(i, j)] = s[(j, i)].clone();
                }
            }
            let mut q = s.clone();
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let anti = rng.scalar_in(-1, 1);
                    q[(i, j)] = &q[(i, j)] + &anti;
                    q[(j, i)] = &q[(j, i)] - &anti;
                }
            }
            if s.rank() < 4 || q.rank() < 4 {
                return None;
            }
            MediumRecipe::QMedium {
                q: Dyadic::new(Space::vectors(1), Space::forms(1), q).expect("4×4 grade-1 map"),
                scale: rng.nonzero_scalar_in(-3, 3),
            }
        }
        Family::QAntisym => {
            let a = random_bivector(rng);
            if a.wedge(&a).expect("grades 2+2").is_zero() {
                return None;
            }
            MediumRecipe::QAntisym { a, scale: rng.nonzero_scalar_in(-3, 3) }
        }
        Family::Dense => MediumRecipe::Raw { mat: small_mat(rng, 6, 6) },
    };
    // Families that promise invertibility are rebuilt and rank-checked.
    let must_be_invertible = matches!(
        family,
        Family::Skewon
            | Family::SkewonAxion
            | Family::PMedium
            | Family::PAxion
            | Family::SpecialPAxion
            | Family::RankTwo
            | Family::QMedium
            | Family::QAntisym
    );
    if must_be_invertible {
        let m = build(&recipe).expect("sampled recipes are well-shaped");
        if m.rank() < 6 {
            return None;
        }
    }
    Some(recipe)
}
