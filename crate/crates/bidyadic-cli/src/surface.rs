//! Wave-surface sampling: real wavenumber roots along a deterministic
//! spread of spatial rays.
//!
//! For each ray direction `u` (an **exactly unit** rational vector) and
//! frequency `ω`, the quartic is restricted to the line `ν(k) = k·u♭ + ω·ε4`
//! — an exact degree-≤4 polynomial in `k` — and its real roots are isolated
//! exactly, refined to full double precision, and tagged with their exact
//! multiplicities.  Floats appear only in the last step (root refinement and
//! CSV rendering); every reported root is audited by lifting it back into
//! the exact polynomial, and the relative residual must stay below
//! [`SURFACE_TOLERANCE`].
//!
//! Rays are generated without any trigonometry on the exact side: polar and
//! azimuthal half-angle tangents are rounded to exact dyadic rationals, and
//! the rational circle parametrization `(1−t², 2t)/(1+t²)` keeps every
//! direction on the unit sphere exactly.

use bidyadic::dispersion::extract_quartic;
use bidyadic::dyadic::modified_from_constitutive;
use bidyadic::exterior::MultiForm;
use bidyadic::media::build;
use bidyadic::qpoly::QPoly;
use bidyadic::scalar::{self, int, One, Scalar, Zero};

use crate::spec_file::{scalar_to_string, MediumSpecFile};
use crate::CliError;

/// Documented audit bound: each reported root, lifted exactly into the
/// restricted quartic, must leave a relative residual below this.
pub const SURFACE_TOLERANCE: f64 = 1e-9;

/// Smallest accepted ray count.
pub const MIN_RESOLUTION: u32 = 8;

/// One sampled ray: its exact unit direction and the real roots of the
/// restricted quartic.
#[derive(Clone, Debug)]
pub struct Ray {
    pub direction: [Scalar; 3],
    /// `None` when the restricted polynomial vanishes identically.
    pub roots: Option<Vec<(f64, usize)>>,
}

fn circle_point(t: &Scalar) -> (Scalar, Scalar) {
    let one = Scalar::one();
    let t2 = t * t;
    let denom = &one + &t2;
    ((&one - &t2) / &denom, (int(2) * t) / &denom)
}

/// Exact dyadic rational near `x`; `x` is always finite here.
fn dyadic_near(x: f64) -> Scalar {
    scalar::from_f64(x).expect("finite floats lift exactly")
}

/// The `i`-th of `n` ray directions: exactly unit, near-uniform on the
/// sphere (equal-area latitudes, Fibonacci azimuth).
fn ray_direction(i: u32, n: u32) -> [Scalar; 3] {
    // Target latitude z = 1 − (2i+1)/n, hit approximately by an exact
    // half-angle tangent; the resulting point is exactly unit regardless.
    let z = 1.0 - (2.0 * f64::from(i) + 1.0) / f64::from(n);
    let polar_t = dyadic_near(((1.0 - z) / (1.0 + z)).sqrt());
    let (cos_polar, sin_polar) = circle_point(&polar_t);
    // Azimuth 2π·frac(i·610/987): the tangent of the half-angle is finite
    // for every i because 987 is odd, and bounded by ~1/tan(π/(2·987)).
    let frac = f64::from((u64::from(i) * 610 % 987) as u32) / 987.0;
    let azimuth_t = dyadic_near((core::f64::consts::PI * frac).tan());
    let (cos_az, sin_az) = circle_point(&azimuth_t);
    [&sin_polar * &cos_az, &sin_polar * &sin_az, cos_polar]
}

/// Square-free decomposition (Yun): returns pairwise-coprime square-free
/// factors with their multiplicities, `p = lc · ∏ fᵢ^{mᵢ}`.
fn square_free_decomposition(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let derivative = p.derivative();
    let a = p.gcd(&derivative);
    let mut b = p.divmod(&a).0;
    let mut c = derivative.divmod(&a).0;
    let mut multiplicity = 1;
    while b.degree().is_some_and(|d| d > 0) {
        let d = c.sub(&b.derivative());
        let g = b.gcd(&d);
        if g.degree().is_some_and(|dg| dg > 0) {
            out.push((g.clone(), multiplicity));
        }
        b = b.divmod(&g).0;
        c = d.divmod(&g).0;
        multiplicity += 1;
    }
    out
}

/// All real roots with exact multiplicities, ascending.
fn roots_with_multiplicity(p: &QPoly) -> Vec<(f64, usize)> {
    let mut roots: Vec<(f64, usize)> = Vec::new();
    for (factor, multiplicity) in square_free_decomposition(p) {
        for root in factor.real_roots_f64() {
            roots.push((root, multiplicity));
        }
    }
    roots.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("roots are finite"));
    roots
}

/// Relative residual of a reported root in the exact polynomial.
fn relative_residual(p: &QPoly, root: f64) -> f64 {
    let exact_root = dyadic_near(root);
    let value = scalar::to_f64(&p.eval(&exact_root)).abs();
    let mut magnitude = 0.0f64;
    let mut power = 1.0f64;
    for coefficient in p.coeffs() {
        magnitude += scalar::to_f64(coefficient).abs() * power;
        power *= root.abs();
    }
    if magnitude == 0.0 {
        value
    } else {
        value / magnitude
    }
}

/// Sample the wave surface: restrict the exact quartic along `resolution`
/// rays at the given frequency.
pub fn sample_surface(
    input: &MediumSpecFile,
    frequency: &Scalar,
    resolution: u32,
) -> Result<Vec<Ray>, CliError> {
    if resolution < MIN_RESOLUTION {
        return Err(CliError::Precondition(format!(
            "resolution must be at least {MIN_RESOLUTION} rays (got {resolution})"
        )));
    }
    let recipe = crate::spec_file::to_recipe(&input.medium)?;
    let m = build(&recipe)?;
    let quartic = extract_quartic(&modified_from_constitutive(&m)?)?;
    let offset = MultiForm::basis(1, 3).scale(frequency);
    let mut rays = Vec::with_capacity(resolution as usize);
    for i in 0..resolution {
        let direction = ray_direction(i, resolution);
        let [ux, uy, uz] = &direction;
        let dir_form = MultiForm::new(
            1,
            vec![ux.clone(), uy.clone(), uz.clone(), Scalar::zero()],
        )
        .expect("four coordinates make a one-form");
        let restricted = quartic.restrict_line(&dir_form, &offset)?;
        let roots = if restricted.is_zero() {
            None
        } else {
            let roots = roots_with_multiplicity(&restricted);
            for (root, _) in &roots {
                let residual = relative_residual(&restricted, *root);
                if residual >= SURFACE_TOLERANCE {
                    return Err(CliError::Internal(format!(
                        "root audit failed on ray {i}: relative residual {residual:e} \
                         is not below {SURFACE_TOLERANCE:e}"
                    )));
                }
            }
            Some(roots)
        };
        rays.push(Ray { direction, roots });
    }
    Ok(rays)
}

/// Render rays as CSV: header comments, then one row per root —
/// `ray,ux,uy,uz,status,k,multiplicity` — with a single `no-real-roots`
/// or `identically-zero` row for rays without roots.
pub fn render_csv(rays: &[Ray], frequency: &Scalar, resolution: u32) -> String {
    let mut out = String::new();
    out.push_str("# bidyadic-surface/1\n");
    out.push_str(&format!("# frequency: {}\n", scalar_to_string(frequency)));
    out.push_str(&format!("# resolution: {resolution}\n"));
    out.push_str(&format!(
        "# tolerance: exact-quartic relative residual < {SURFACE_TOLERANCE:e} per root\n"
    ));
    out.push_str("ray,ux,uy,uz,status,k,multiplicity\n");
    for (i, ray) in rays.iter().enumerate() {
        let [ux, uy, uz] = &ray.direction;
        let prefix = format!(
            "{i},{},{},{}",
            scalar::to_f64(ux),
            scalar::to_f64(uy),
            scalar::to_f64(uz)
        );
        match &ray.roots {
            None => out.push_str(&format!("{prefix},identically-zero,,\n")),
            Some(roots) if roots.is_empty() => {
                out.push_str(&format!("{prefix},no-real-roots,,\n"))
            }
            Some(roots) => {
                for (root, multiplicity) in roots {
                    out.push_str(&format!("{prefix},ok,{root},{multiplicity}\n"));
                }
            }
        }
    }
    out
}

/// Full surface run: sample and render.
pub fn run_surface(
    input: &MediumSpecFile,
    frequency: &Scalar,
    resolution: u32,
) -> Result<String, CliError> {
    let rays = sample_surface(input, frequency, resolution)?;
    Ok(render_csv(&rays, frequency, resolution))
}
