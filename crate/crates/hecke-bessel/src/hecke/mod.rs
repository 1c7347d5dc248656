//! The seven families of Dirichlet-series pairs with their functional-equation data.

use crate::arith::{
    all_characters, field_constants, gauss_sum, ideal_count, r_k, sigma_k, tau, CoefficientTable,
    DirichletCharacter, Parity,
};
use crate::error::{domain, Error, Result};
use crate::specfun::{gamma, zeta};
use num::complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Sums of k squares.
    Rk,
    /// Divisor power sums σ_k, k odd.
    Sigma,
    /// Ramanujan's τ.
    Tau,
    /// Odd primitive character mod q.
    ChiOdd,
    /// Even primitive character mod q.
    ChiEven,
    /// Ideal counts of ℚ(√−D).
    Ideal,
    /// Riemann ζ(2s) written over n²/2.
    Zeta,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Self::Rk, Self::Sigma, Self::Tau, Self::ChiOdd, Self::ChiEven, Self::Ideal, Self::Zeta];

    pub fn id(&self) -> &'static str {
        match self {
            Self::Rk => "RK",
            Self::Sigma => "SIGMA",
            Self::Tau => "TAU",
            Self::ChiOdd => "CHI-ODD",
            Self::ChiEven => "CHI-EVEN",
            Self::Ideal => "IDEAL",
            Self::Zeta => "ZETA",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown system {s}")))
    }
}

/// Entry parameters; each family reads the ones it needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SystemParams {
    /// k for RK and SIGMA.
    pub k: u32,
    /// Modulus for the character families.
    pub q: u64,
    /// Enumeration index among all characters mod q; `None` picks the first primitive one of the right parity.
    pub char_index: Option<usize>,
    /// |disc| for IDEAL.
    pub disc: u64,
}

impl Default for SystemParams {
    fn default() -> Self {
        Self { k: 2, q: 4, char_index: None, disc: 4 }
    }
}

impl SystemParams {
    pub fn with_k(k: u32) -> Self {
        Self { k, ..Default::default() }
    }
    pub fn with_q(q: u64) -> Self {
        Self { q, ..Default::default() }
    }
    pub fn with_disc(disc: u64) -> Self {
        Self { disc, ..Default::default() }
    }
}

/// Q(x) = Σ cᵢ x^{pᵢ}.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ResidualTerm {
    pub monomials: Vec<(f64, f64)>,
}

impl ResidualTerm {
    pub fn zero() -> Self {
        Self { monomials: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.iter().all(|&(c, _)| c == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.monomials
            .iter()
            .map(|&(c, p)| if p == 0.0 { c } else { c * x.powf(p) })
            .sum()
    }

    /// Value at 0, finite when all powers are ≥ 0.
    pub fn at_zero(&self) -> f64 {
        self.monomials.iter().filter(|&&(_, p)| p == 0.0).map(|&(c, _)| c).sum()
    }

    pub fn derivative(&self) -> ResidualTerm {
        ResidualTerm {
            monomials: self
                .monomials
                .iter()
                .filter(|&&(_, p)| p != 0.0)
                .map(|&(c, p)| (c * p, p - 1.0))
                .collect(),
        }
    }

    /// Monomials with coefficient magnitudes; bounds |Q(x)| from above.
    pub fn abs_bound(&self, x: f64) -> f64 {
        self.monomials.iter().map(|&(c, p)| c.abs() * x.powf(p)).sum()
    }
}

pub fn residual_eval(r: &ResidualTerm, x: f64) -> f64 {
    r.eval(x)
}

/// Upper bounds for Σ_{1≤n≤t} |a(n)| (equal to the same sum for b in every family).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoefficientGrowth {
    /// V_k(√t + √k/2)^k, the volume of a slightly enlarged ball.
    Lattice { k: u32 },
    /// ζ(k+1) t^{k+1}.
    DivisorPower { k: u32, zeta: f64 },
    /// t^{13/2}(ln t + 1), from |τ(n)| ≤ d(n) n^{11/2}.
    Tau,
    /// (t² + t)/2.
    LinearWeight,
    /// t(ln t + 1), from F(n) ≤ d(n).
    Divisor,
    /// t.
    Unit,
}

impl CoefficientGrowth {
    pub fn bound(&self, t: f64) -> f64 {
        if t < 1.0 {
            return 0.0;
        }
        match *self {
            Self::Lattice { k } => {
                let kf = k as f64;
                let ball = PI.powf(kf / 2.0) / gamma(kf / 2.0 + 1.0).map(|g| g.value).unwrap_or(f64::NAN);
                ball * (t.sqrt() + kf.sqrt() / 2.0).powf(kf)
            }
            Self::DivisorPower { k, zeta } => zeta * t.powf(k as f64 + 1.0),
            Self::Tau => t.powf(6.5) * (t.ln() + 1.0),
            Self::LinearWeight => (t * t + t) / 2.0,
            Self::Divisor => t * (t.ln() + 1.0),
            Self::Unit => t,
        }
    }
}

/// λ_n = μ_n = scale · n^power.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spectrum {
    pub scale: f64,
    pub power: u32,
}

impl Spectrum {
    pub fn at(&self, n: f64) -> f64 {
        self.scale * n.powi(self.power as i32)
    }

    /// Largest real n with at(n) ≤ x.
    pub fn inverse(&self, x: f64) -> f64 {
        (x / self.scale).powf(1.0 / self.power as f64)
    }
}

/// One Dirichlet-series pair φ, ψ with its functional-equation data.
#[derive(Clone, Debug)]
pub struct HeckeSystem {
    pub family: Family,
    pub params: SystemParams,
    pub delta: f64,
    pub sigma_a_star: f64,
    /// a(n) for 0 ≤ n ≤ N; index 0 carries the n = 0 convention value where the family defines one.
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
    /// Scalar multiplying b relative to the conjugated a-sequence (sign for SIGMA, root number for characters).
    pub b_prefactor: Complex64,
    pub spectrum: Spectrum,
    pub residual: ResidualTerm,
    pub growth: CoefficientGrowth,
    pub character: Option<DirichletCharacter>,
    pub notes: String,
}

fn real_seq(t: &CoefficientTable) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = t.values.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect();
    v[0] = Complex64::new(t.zero_f64(), 0.0);
    v
}

/// Picks the character mod q of the requested parity.
pub fn select_character(q: u64, parity: Parity, index: Option<usize>) -> Result<DirichletCharacter> {
    if !(3..=100).contains(&q) {
        return domain(format!("modulus must satisfy 3 ≤ q ≤ 100, got {q}"));
    }
    let all = all_characters(q)?;
    let chosen = match index {
        Some(i) => all.into_iter().nth(i).ok_or_else(|| Error::Domain(format!("no character {i} mod {q}")))?,
        None => all
            .into_iter()
            .find(|c| c.primitive && c.parity == parity)
            .ok_or_else(|| Error::Domain(format!("no primitive {parity:?} character mod {q}")))?,
    };
    if !chosen.primitive {
        return domain(format!("character {} mod {q} is not primitive", chosen.index));
    }
    if chosen.parity != parity {
        return domain(format!("character {} mod {q} has the wrong parity", chosen.index));
    }
    Ok(chosen)
}

/// Builds a system with coefficient tables of length N + 1.
pub fn catalog(family: Family, params: SystemParams, n_max: usize) -> Result<HeckeSystem> {
    let n_max = n_max.max(1);
    let one = Complex64::new(1.0, 0.0);
    let sys = match family {
        Family::Rk => {
            let k = params.k;
            let t = r_k(k, n_max)?;
            let a = real_seq(&t);
            let kf = k as f64;
            HeckeSystem {
                family,
                params,
                delta: kf / 2.0,
                sigma_a_star: kf / 2.0,
                b: a.clone(),
                a,
                b_prefactor: one,
                spectrum: Spectrum { scale: 0.5, power: 1 },
                residual: ResidualTerm {
                    monomials: vec![(-1.0, 0.0), ((2.0 * PI).powf(kf / 2.0) / gamma(1.0 + kf / 2.0)?.value, kf / 2.0)],
                },
                growth: CoefficientGrowth::Lattice { k },
                character: None,
                notes: format!("r_{k}(n), r_{k}(0) = 1"),
            }
        }
        Family::Sigma => {
            let k = params.k;
            let t = sigma_k(k, n_max)?;
            let a = real_seq(&t);
            let sign = if ((k + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            let b = a.iter().map(|&x| x * sign).collect();
            let kf = k as f64;
            let bern = -2.0 * (kf + 1.0) * t.zero_f64();
            let top = (2.0 * PI).powf(kf + 1.0) * (-sign) * bern / (2.0 * (kf + 1.0) * gamma(kf + 2.0)?.value);
            let mut monomials = vec![(bern / (2.0 * (kf + 1.0)), 0.0)];
            if k == 1 {
                monomials.push((-0.5, 1.0));
            }
            monomials.push((top, kf + 1.0));
            HeckeSystem {
                family,
                params,
                delta: kf + 1.0,
                sigma_a_star: kf + 1.0,
                a,
                b,
                b_prefactor: Complex64::new(sign, 0.0),
                spectrum: Spectrum { scale: 1.0, power: 1 },
                residual: ResidualTerm { monomials },
                growth: CoefficientGrowth::DivisorPower { k, zeta: zeta(kf + 1.0)?.value },
                character: None,
                notes: format!("σ_{k}(n), σ_{k}(0) = −B_{}/{}", k + 1, 2 * (k + 1)),
            }
        }
        Family::Tau => {
            let t = tau(n_max)?;
            let a = real_seq(&t);
            HeckeSystem {
                family,
                params,
                delta: 12.0,
                sigma_a_star: 6.5,
                b: a.clone(),
                a,
                b_prefactor: one,
                spectrum: Spectrum { scale: 1.0, power: 1 },
                residual: ResidualTerm::zero(),
                growth: CoefficientGrowth::Tau,
                character: None,
                notes: "τ(n)".into(),
            }
        }
        Family::ChiOdd | Family::ChiEven => {
            let parity = if family == Family::ChiOdd { Parity::Odd } else { Parity::Even };
            let q = params.q;
            let chi = select_character(q, parity, params.char_index)?;
            let g = gauss_sum(&chi)?;
            let sq = (q as f64).sqrt();
            let (prefactor, weight, delta, sas, growth) = match parity {
                Parity::Odd => (Complex64::new(0.0, -1.0) * g / sq, 1, 1.5, 1.0, CoefficientGrowth::LinearWeight),
                Parity::Even => (g / sq, 0, 0.5, 0.5, CoefficientGrowth::Unit),
            };
            let a: Vec<Complex64> =
                (0..=n_max as u64).map(|n| chi.value(n) * (n as f64).powi(weight)).collect();
            let b = (0..=n_max as u64).map(|n| prefactor * chi.conj_value(n) * (n as f64).powi(weight)).collect();
            HeckeSystem {
                family,
                params: SystemParams { char_index: Some(chi.index), ..params },
                delta,
                sigma_a_star: sas,
                a,
                b,
                b_prefactor: prefactor,
                spectrum: Spectrum { scale: 1.0 / (2.0 * q as f64), power: 2 },
                residual: ResidualTerm::zero(),
                growth,
                notes: format!("χ mod {q}, index {}", chi.index),
                character: Some(chi),
            }
        }
        Family::Ideal => {
            let d = params.disc;
            let t = ideal_count(d, n_max)?;
            let fc = field_constants(d)?;
            let a = real_seq(&t);
            let hrw = (fc.class_number * fc.regulator) as f64 / fc.roots_of_unity as f64;
            HeckeSystem {
                family,
                params,
                delta: 1.0,
                sigma_a_star: 1.0,
                b: a.clone(),
                a,
                b_prefactor: one,
                spectrum: Spectrum { scale: 1.0 / (d as f64).sqrt(), power: 1 },
                residual: ResidualTerm { monomials: vec![(-hrw, 0.0), (2.0 * PI * hrw, 1.0)] },
                growth: CoefficientGrowth::Divisor,
                character: None,
                notes: format!("F(n) for ℚ(√−{d}), h = {}, w = {}", fc.class_number, fc.roots_of_unity),
            }
        }
        Family::Zeta => {
            let mut a = vec![one; n_max + 1];
            a[0] = Complex64::new(0.0, 0.0);
            HeckeSystem {
                family,
                params,
                delta: 0.5,
                sigma_a_star: 0.5,
                b: a.clone(),
                a,
                b_prefactor: one,
                spectrum: Spectrum { scale: 0.5, power: 2 },
                residual: ResidualTerm { monomials: vec![(-0.5, 0.0), (2f64.sqrt(), 0.5)] },
                growth: CoefficientGrowth::Unit,
                character: None,
                notes: "a(n) = b(n) = 1, λ_n = n²/2".into(),
            }
        }
    };
    Ok(sys)
}

impl HeckeSystem {
    pub fn id(&self) -> String {
        match self.family {
            Family::Rk | Family::Sigma => format!("{}(k={})", self.family, self.params.k),
            Family::ChiOdd | Family::ChiEven => {
                format!("{}(q={},index={})", self.family, self.params.q, self.params.char_index.unwrap_or(0))
            }
            Family::Ideal => format!("IDEAL(D={})", self.params.disc),
            Family::Tau | Family::Zeta => self.family.to_string(),
        }
    }

    /// Largest index with a tabulated coefficient.
    pub fn max_index(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a_at(&self, n: usize) -> Result<Complex64> {
        self.a.get(n).copied().ok_or(Error::TableTooShort { needed: n, available: self.max_index() })
    }

    pub fn b_at(&self, n: usize) -> Result<Complex64> {
        self.b.get(n).copied().ok_or(Error::TableTooShort { needed: n, available: self.max_index() })
    }

    pub fn lambda(&self, n: usize) -> f64 {
        self.spectrum.at(n as f64)
    }

    /// For character families: (max_M |Σ_{n≤M} χ(n)|, w) where a(n) = χ(n)·n^w.
    pub fn oscillation(&self) -> Option<(f64, i32)> {
        let chi = self.character.as_ref()?;
        let mut acc = Complex64::new(0.0, 0.0);
        let mut h = 0.0f64;
        for n in 1..=chi.modulus {
            acc += chi.value(n);
            h = h.max(acc.norm());
        }
        Some((h, if self.family == Family::ChiOdd { 1 } else { 0 }))
    }

    /// Riesz residual Q_ρ where its closed form is known.
    pub fn residual_rho(&self, rho: f64) -> Result<ResidualTerm> {
        if rho == 0.0 {
            return Ok(self.residual.clone());
        }
        match self.family {
            Family::Tau | Family::ChiOdd | Family::ChiEven => Ok(ResidualTerm::zero()),
            Family::Rk => {
                let h = self.params.k as f64 / 2.0;
                Ok(ResidualTerm {
                    monomials: vec![
                        (-1.0 / gamma(rho + 1.0)?.value, rho),
                        ((2.0 * PI).powf(h) / gamma(h + rho + 1.0)?.value, h + rho),
                    ],
                })
            }
            _ => Err(Error::Unsupported(format!("Q_ρ for ρ ≠ 0 is not available for {}", self.family))),
        }
    }

    /// P(x) of the exponential-kernel relation, from the poles of Γ(z)φ(z)x^{−z}.
    pub fn modular_residual(&self, x: f64) -> Result<f64> {
        Ok(match self.family {
            Family::Rk => -1.0 + (2.0 * PI / x).powf(self.params.k as f64 / 2.0),
            Family::Tau | Family::ChiOdd | Family::ChiEven => 0.0,
            Family::Zeta => -0.5 + (PI / (2.0 * x)).sqrt(),
            Family::Sigma => {
                let k = self.params.k as f64;
                let at_zero = self.residual.at_zero();
                let one = if self.params.k == 1 { -0.5 / x } else { 0.0 };
                at_zero + one + gamma(k + 1.0)?.value * zeta(k + 1.0)?.value * x.powf(-(k + 1.0))
            }
            Family::Ideal => {
                let hrw = -self.residual.at_zero();
                -hrw + 2.0 * PI * hrw / x
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_examples() {
        let rk = catalog(Family::Rk, SystemParams::with_k(2), 10).unwrap();
        assert_eq!(rk.residual.eval(0.0), -1.0);
        assert_eq!((rk.delta, rk.spectrum.at(3.0)), (1.0, 1.5));
        let id = catalog(Family::Ideal, SystemParams::with_disc(4), 10).unwrap();
        assert!((id.residual.eval(1.0) - (-0.25 + 2.0 * PI / 4.0)).abs() < 1e-15);
        let z = catalog(Family::Zeta, SystemParams::default(), 10).unwrap();
        assert!((z.residual.eval(0.5) - 0.5).abs() < 1e-15);
        let s1 = catalog(Family::Sigma, SystemParams::with_k(1), 10).unwrap();
        assert_eq!(s1.residual.monomials.len(), 3);
        let s3 = catalog(Family::Sigma, SystemParams::with_k(3), 10).unwrap();
        assert_eq!(s3.residual.monomials.len(), 2);
        assert!(catalog(Family::Sigma, SystemParams::with_k(2), 10).is_err());
    }

    #[test]
    fn character_prefactor_for_modulus_four() {
        let s = catalog(Family::ChiOdd, SystemParams::with_q(4), 10).unwrap();
        assert!((s.b_prefactor - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(s.delta, 1.5);
        assert!(catalog(Family::ChiEven, SystemParams::with_q(4), 10).is_err());
    }

    #[test]
    fn rho_residual_reduces_at_zero() {
        let rk = catalog(Family::Rk, SystemParams::with_k(4), 10).unwrap();
        let q = rk.residual_rho(1e-300).unwrap();
        for x in [0.3, 1.0, 2.5] {
            assert!((q.eval(x) - rk.residual.eval(x)).abs() < 1e-12);
        }
        assert!(catalog(Family::Ideal, SystemParams::with_disc(3), 5).unwrap().residual_rho(0.5).is_err());
    }
}
