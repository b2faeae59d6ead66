//! Local representation densities, the singular series, and the main term.
//!
//! Densities are exact rationals.  Away from the discriminant the density of
//! an odd prime has the closed form
//!
//! ```text
//! δ_p(m) = (1 − p⁻²) · (1 + p⁻¹ + … + p^{−v_p(m)})
//! ```
//!
//! while primes dividing the discriminant are exposed as normalized solution
//! counts (mod 8 at p = 2, mod p at odd p | disc): the closed form does not
//! apply there and the counts are what enters the singular series.  Floats
//! appear only as shadows computed from the exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::count::{count_primitive, PrimitiveMethod};
use crate::ideals::factorize;
use crate::{FormError, QuadForm, Result};

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats exactly like the geometry layer: bare integers, else `num/den`.
fn rational_string(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// p-adic valuation of m.
fn valuation(mut m: i64, p: i64) -> u32 {
    let mut v = 0;
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    v
}

/// Normalized count of solutions of `f ≡ m (mod q)` over `(ℤ/q)⁴`, divided
/// by `q³`.
fn counted_density(f: &QuadForm, m: i64, q: i64) -> BigRational {
    let mut solutions = 0i64;
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                for t in 0..q {
                    if (f.eval(x, y, z, t) - m).rem_euclid(q) == 0 {
                        solutions += 1;
                    }
                }
            }
        }
    }
    ratio(solutions, q * q * q)
}

/// Exact local density of the form at the prime `p` for target `m ≥ 1`.
///
/// For `p` not dividing the discriminant this is the closed form above; at
/// `p = 2` it is `#{f ≡ m (mod 8)} / 8³`, and at odd `p | disc` it is
/// `#{f ≡ m (mod p)} / p³`.  The counted levels are exact for targets
/// coprime to the discriminant (e.g. mod 8 settles every odd target); when
/// `p` divides both `m` and the discriminant they are the first-level
/// truncation of the density — reported as counts by design.
pub fn local_density(f: &QuadForm, m: i64, p: i64) -> Result<BigRational> {
    if m < 1 {
        return Err(FormError::NonPositiveTarget { m });
    }
    debug_assert_eq!(factorize(p), vec![(p, 1)], "p = {p} must be prime");
    if p == 2 {
        return Ok(counted_density(f, m, 8));
    }
    if f.disc() % p == 0 {
        return Ok(counted_density(f, m, p));
    }
    let v = valuation(m, p);
    let one = BigRational::one();
    let inv_p = ratio(1, p);
    let mut geometric = BigRational::zero();
    let mut pk = BigRational::one();
    for _ in 0..=v {
        geometric += &pk;
        pk *= &inv_p;
    }
    Ok((one.clone() - &inv_p * &inv_p) * geometric)
}

/// The singular series 𝔖(m) = Π_p δ_p(m) as an exact rational multiple of
/// 1/ζ(2) together with its float value.
///
/// Only finitely many primes contribute factors ≠ (1 − p⁻²): those dividing
/// 2·disc·m.  Factoring out ζ(2)⁻¹ = Π(1 − p⁻²) leaves the returned
/// rational `R = Π_{p | 2·disc·m} δ_p(m)/(1 − p⁻²)`; the float shadow is
/// `R · 6/π²`.
pub fn singular_series(f: &QuadForm, m: i64) -> Result<(BigRational, f64)> {
    if m < 1 {
        return Err(FormError::NonPositiveTarget { m });
    }
    let mut rational = BigRational::one();
    for p in relevant_primes(f, m) {
        let delta = local_density(f, m, p)?;
        let zeta_factor = BigRational::one() - ratio(1, p * p);
        rational *= delta / zeta_factor;
    }
    let float = rational
        .to_f64()
        .map(|r| r * 6.0 / (std::f64::consts::PI * std::f64::consts::PI))
        .unwrap_or(f64::NAN);
    Ok((rational, float))
}

/// Ascending primes dividing 2·disc·m — the only ones whose local factor
/// can differ from (1 − p⁻²).
fn relevant_primes(f: &QuadForm, m: i64) -> Vec<i64> {
    let mut primes: Vec<i64> = factorize(f.disc()).into_iter().map(|(p, _)| p).collect();
    for (p, _) in factorize(m) {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes.sort_unstable();
    primes
}

/// Asymptotic main term for the primitive count `N_P(m)`, as an exact
/// rational with float shadow.
///
/// For `m` coprime to the discriminant it reduces to the finite product
///
/// ```text
/// main(m) = 3m/(8a0²) · Π_{p | disc} δ_p(m)/(1 − p⁻²) · Π_{p | m} λ_p,
///   λ_p = (p − 1)/p  if p ≡ 1 (mod 4),
///   λ_p = (p + 1)/p  if p ≡ 3 (mod 4),
/// ```
///
/// equal to `π²/(16a0²) · m · 𝔖(m) · (mean-square corrections)` with the
/// corrections collapsing to λ_p independent of the multiplicity of p in m.
///
/// # Errors
///
/// Rejects `m < 1` and targets sharing a factor with the discriminant; the
/// correction product is only established away from the discriminant.
pub fn main_term(f: &QuadForm, m: i64) -> Result<(BigRational, f64)> {
    if m < 1 {
        return Err(FormError::NonPositiveTarget { m });
    }
    if num_integer::gcd(m, f.disc()) != 1 {
        return Err(FormError::NotCoprimeToDiscriminant {
            m,
            disc: f.disc(),
        });
    }
    let mut rational = ratio(3 * m, 8 * f.a0 * f.a0);
    for (p, _) in factorize(f.disc()) {
        let delta = local_density(f, m, p)?;
        let zeta_factor = BigRational::one() - ratio(1, p * p);
        rational *= delta / zeta_factor;
    }
    for (p, _) in factorize(m) {
        let lambda = if p % 4 == 1 {
            ratio(p - 1, p)
        } else {
            ratio(p + 1, p)
        };
        rational *= lambda;
    }
    debug_assert!(!rational.is_negative());
    let float = rational.to_f64().unwrap_or(f64::NAN);
    Ok((rational, float))
}

/// Exact local density at one prime, serialized as a `"num/den"` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDensity {
    pub p: i64,
    /// v_p(m).
    pub valuation: u32,
    /// δ_p(m) as a bare integer or `"num/den"`.
    pub density: String,
}

/// Everything the density analysis knows about one target m.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub m: i64,
    /// δ_p for every prime dividing 2·disc·m.
    pub local_densities: Vec<PrimeDensity>,
    /// Singular series as an exact multiple of 1/ζ(2), `"num/den"` form.
    pub singular_series_rational: String,
    /// Float shadow of the singular series.
    pub singular_series: f64,
    /// Float shadow of the exact main term.
    pub main_term: f64,
    /// Primitive representations of m up to the unit action.
    pub primitive_count: u64,
}

/// Bundles local densities, singular series, main term, and the exact
/// primitive count for one target.
///
/// # Errors
///
/// Inherits the preconditions of its parts: `m ≥ 1`, `m` coprime to the
/// discriminant (for the main term), and `m` within the counting budget.
pub fn density_report(f: &QuadForm, m: i64) -> Result<DensityReport> {
    let local_densities = relevant_primes(f, m)
        .into_iter()
        .map(|p| {
            local_density(f, m, p).map(|d| PrimeDensity {
                p,
                valuation: valuation(m, p),
                density: rational_string(&d),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (series_rational, series_float) = singular_series(f, m)?;
    let (_, main_float) = main_term(f, m)?;
    let primitive_count = count_primitive(f, m, PrimitiveMethod::Moebius)?;
    Ok(DensityReport {
        m,
        local_densities,
        singular_series_rational: rational_string(&series_rational),
        singular_series: series_float,
        main_term: main_float,
        primitive_count,
    })
}
