//! The closed catalog of identities, their parameter boxes and variants.

use super::{classical, first, require, second, uniform, Ctx, IdentityParams, Side};
use crate::arith::{all_characters, Parity};
use crate::error::{Error, Result};
use crate::hecke::{Family, SystemParams};
use crate::report::Comparison;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    T1,
    RkK,
    SigmaK,
    TauK,
    ChiOddK,
    ChiEvenK,
    IdealK,
    Guinand,
    T2,
    CorKTransform,
    Rk2F1,
    Tau2F1,
    TauSinh,
    TauExp,
    ChiOdd2F1,
    ChiOddSinh,
    ChiEven2F1,
    ChiEvenLog,
    Zeta2F1,
    WatsonEq4,
    Elliptic,
    WatsonK0,
    ZetaLog,
}

/// How parameters are drawn.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sampling {
    /// ν from the variant range; c, r ∈ [0.3, 2].
    Kernel,
    /// β ∈ [0.5, 2], α ∈ [β + 0.5, 6], and ν from the variant range when the identity has one.
    Pair,
    /// ν from the variant range; s ∈ [2, 6].
    Transform,
    /// α ∈ [1, 6] and β = π²/α.
    Reciprocal,
    /// ν ∈ [1, 3]; z ∈ [0.5, 3].
    Watson,
    /// A single named parameter in [lo, hi].
    Single(&'static str, f64, f64),
}

/// A concrete coefficient system (or fixed parameter) an identity is run with.
#[derive(Clone, Debug, PartialEq)]
pub struct Variant {
    pub system: Option<(Family, SystemParams)>,
    pub nu: (f64, f64),
    pub fixed_s: Option<f64>,
    pub label: String,
}

impl Variant {
    pub fn plain(label: &str) -> Self {
        Self { system: None, nu: (-0.9, 3.0), fixed_s: None, label: label.into() }
    }

    pub fn system(family: Family, params: SystemParams, nu: (f64, f64)) -> Self {
        let label = match family {
            Family::Rk | Family::Sigma => format!("{family}(k={})", params.k),
            Family::ChiOdd | Family::ChiEven => match params.char_index {
                Some(i) => format!("{family}(q={},index={i})", params.q),
                None => format!("{family}(q={})", params.q),
            },
            Family::Ideal => format!("IDEAL(D={})", params.disc),
            Family::Tau | Family::Zeta => family.to_string(),
        };
        Self { system: Some((family, params)), nu, fixed_s: None, label }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: IdentityId,
    pub variants: Vec<Variant>,
}

const KERNEL_NU: (f64, f64) = (-0.9, 3.0);

fn character_params(q: u64, parity: Parity) -> Vec<SystemParams> {
    all_characters(q)
        .map(|cs| {
            cs.into_iter()
                .filter(|c| c.primitive && c.parity == parity)
                .map(|c| SystemParams { q, char_index: Some(c.index), ..Default::default() })
                .collect()
        })
        .unwrap_or_default()
}

fn odd_characters() -> Vec<SystemParams> {
    [4, 5].into_iter().flat_map(|q| character_params(q, Parity::Odd)).collect()
}

fn even_characters() -> Vec<SystemParams> {
    [5, 8].into_iter().flat_map(|q| character_params(q, Parity::Even)).collect()
}

fn sys(family: Family, params: SystemParams, nu: (f64, f64)) -> Variant {
    Variant::system(family, params, nu)
}

/// The full catalog in its fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    use Family::*;
    use IdentityId::*;
    let d = SystemParams::default();
    IdentityId::ALL
        .into_iter()
        .map(|id| {
            let variants = match id {
                T1 => {
                    let mut v = vec![
                        sys(Rk, SystemParams::with_k(2), KERNEL_NU),
                        sys(Rk, SystemParams::with_k(4), KERNEL_NU),
                        sys(Sigma, SystemParams::with_k(1), KERNEL_NU),
                        sys(Sigma, SystemParams::with_k(3), KERNEL_NU),
                        sys(Tau, d, KERNEL_NU),
                    ];
                    v.push(sys(ChiOdd, odd_characters()[0], KERNEL_NU));
                    v.push(sys(ChiEven, even_characters()[0], KERNEL_NU));
                    v.push(sys(Ideal, SystemParams::with_disc(3), KERNEL_NU));
                    v.push(sys(Zeta, d, KERNEL_NU));
                    v
                }
                RkK => [2, 3, 4].map(|k| sys(Rk, SystemParams::with_k(k), KERNEL_NU)).to_vec(),
                SigmaK => [1, 3].map(|k| sys(Sigma, SystemParams::with_k(k), KERNEL_NU)).to_vec(),
                TauK => vec![sys(Tau, d, KERNEL_NU)],
                ChiOddK => odd_characters().into_iter().map(|p| sys(ChiOdd, p, KERNEL_NU)).collect(),
                ChiEvenK => even_characters().into_iter().map(|p| sys(ChiEven, p, KERNEL_NU)).collect(),
                IdealK => [3, 4, 23].map(|dd| sys(Ideal, SystemParams::with_disc(dd), KERNEL_NU)).to_vec(),
                Guinand => [0.0, 0.5, 2.0]
                    .map(|s| Variant { fixed_s: Some(s), label: format!("s={s}"), ..Variant::plain("") })
                    .to_vec(),
                T2 => vec![
                    sys(Rk, SystemParams::with_k(2), (0.5, 3.0)),
                    sys(Tau, d, (-0.9, 3.0)),
                    sys(ChiOdd, odd_characters()[0], (-0.5, 3.0)),
                    sys(ChiEven, even_characters()[0], (-0.5, 3.0)),
                    sys(Zeta, d, (0.5, 3.0)),
                ],
                CorKTransform => vec![
                    sys(Rk, SystemParams::with_k(2), (0.5, 3.0)),
                    sys(Tau, d, (-0.9, 3.0)),
                    sys(Zeta, d, (0.0, 3.0)),
                ],
                Rk2F1 => [2, 3, 4].map(|k| sys(Rk, SystemParams::with_k(k), (2.5, 4.0))).to_vec(),
                Tau2F1 => vec![sys(Tau, d, (-0.9, 3.0))],
                TauSinh | TauExp => vec![sys(Tau, d, KERNEL_NU)],
                ChiOdd2F1 => odd_characters().into_iter().map(|p| sys(ChiOdd, p, (-0.5, 3.0))).collect(),
                ChiOddSinh => odd_characters().into_iter().map(|p| sys(ChiOdd, p, KERNEL_NU)).collect(),
                ChiEven2F1 => even_characters().into_iter().map(|p| sys(ChiEven, p, (-0.5, 3.0))).collect(),
                ChiEvenLog => even_characters().into_iter().map(|p| sys(ChiEven, p, KERNEL_NU)).collect(),
                Zeta2F1 => vec![Variant { nu: (0.0, 3.0), ..Variant::plain("ZETA") }],
                WatsonEq4 => vec![Variant { nu: (1.0, 3.0), ..Variant::plain("") }],
                Elliptic | WatsonK0 | ZetaLog => vec![Variant::plain("")],
            };
            CatalogEntry { id, variants }
        })
        .collect()
}

impl IdentityId {
    pub const ALL: [IdentityId; 23] = [
        Self::T1,
        Self::RkK,
        Self::SigmaK,
        Self::TauK,
        Self::ChiOddK,
        Self::ChiEvenK,
        Self::IdealK,
        Self::Guinand,
        Self::T2,
        Self::CorKTransform,
        Self::Rk2F1,
        Self::Tau2F1,
        Self::TauSinh,
        Self::TauExp,
        Self::ChiOdd2F1,
        Self::ChiOddSinh,
        Self::ChiEven2F1,
        Self::ChiEvenLog,
        Self::Zeta2F1,
        Self::WatsonEq4,
        Self::Elliptic,
        Self::WatsonK0,
        Self::ZetaLog,
    ];

    pub fn id(&self) -> &'static str {
        use IdentityId::*;
        match self {
            T1 => "T1",
            RkK => "RK-K",
            SigmaK => "SIGMA-K",
            TauK => "TAU-K",
            ChiOddK => "CHI-ODD-K",
            ChiEvenK => "CHI-EVEN-K",
            IdealK => "IDEAL-K",
            Guinand => "GUINAND",
            T2 => "T2",
            CorKTransform => "COR-K-TRANSFORM",
            Rk2F1 => "RK-2F1",
            Tau2F1 => "TAU-2F1",
            TauSinh => "TAU-SINH",
            TauExp => "TAU-EXP",
            ChiOdd2F1 => "CHI-ODD-2F1",
            ChiOddSinh => "CHI-ODD-SINH",
            ChiEven2F1 => "CHI-EVEN-2F1",
            ChiEvenLog => "CHI-EVEN-LOG",
            Zeta2F1 => "ZETA-2F1",
            WatsonEq4 => "WATSON-EQ4",
            Elliptic => "ELLIPTIC",
            WatsonK0 => "WATSON-K0",
            ZetaLog => "ZETA-LOG",
        }
    }

    /// One-line statement of the identity.
    pub fn summary(&self) -> &'static str {
        use IdentityId::*;
        match self {
            T1 => "Σ a(n) K_{ν−1}-kernel at c²+λ_n = dual Σ b(n) K_{δ+1−ν}-kernel at r²+μ_n + residual integral",
            RkK => "sums of k squares: K_ν series at c²+n/2 equals K_{k/2−ν} series at r²+n/2",
            SigmaK => "σ_k (k odd): K_ν series at c²+n equals signed K_{k+1−ν} series, with a K_{ν−1} correction for k=1",
            TauK => "Ramanujan τ: K_ν series at c²+n equals K_{12−ν} series at r²+n",
            ChiOddK => "odd primitive χ: Σ nχ(n) K_ν kernel equals −iτ(χ)/√q Σ nχ̄(n) K_{3/2−ν} kernel",
            ChiEvenK => "even primitive χ: Σ χ(n) K_ν kernel equals τ(χ)/√q Σ χ̄(n) K_{1/2−ν} kernel",
            IdealK => "ideal counts of ℚ(√−D): K_ν series at c²+n/√D equals K_{1−ν} series at r²+n/√D",
            Guinand => "Σ σ_{−s}(n) n^{s/2} K_{s/2}(2nα) transformation with αβ = π²",
            T2 => "Σ a(n) I_{ν+1}K_{ν+1} over √λ_n equals a ₂F₁ series over μ_n plus residual terms",
            CorKTransform => "Σ a(n) λ_n^{(ν+1)/2} K_{ν+1}(s√λ_n) equals an algebraic series in 16π²μ_n + s²",
            Rk2F1 => "sums of k squares: Σ r_k(n) I_ν K_ν equals a ₂F₁ series over n+α, n+β",
            Tau2F1 => "Ramanujan τ: Σ τ(n) I_{ν+1}K_{ν+1} equals a terminating ₂F₁ series",
            TauSinh => "Ramanujan τ at ν = −1/2: exponential–sinh series equals a difference of (4n+·)^{−23/2}",
            TauExp => "Ramanujan τ: Σ τ(n) e^{−s√n} equals Σ s τ(n)/(s²+16π²n)^{25/2}",
            ChiOdd2F1 => "odd χ: Σ nχ(n) I_{ν+1}K_{ν+1} equals a ₂F₁ series in χ̄",
            ChiOddSinh => "odd χ at ν = −1/2: exponential–sinh series equals a rational series in χ̄",
            ChiEven2F1 => "even χ: Σ χ(n) I_{ν+1}K_{ν+1} equals a ₂F₁ series in χ̄",
            ChiEvenLog => "even χ at ν = −1/2: exponential–sinh series over n equals a logarithmic series in χ̄",
            Zeta2F1 => "a(n) = 1, λ_n = n²: Σ I_{ν+1}K_{ν+1}(πn(√α±√β)) equals a ₂F₁ series",
            WatsonEq4 => "½Γ(ν) + 2Σ (nz/2)^ν K_ν(nz) equals √π Γ(ν+½) z^{2ν} Σ (z²+4n²π²)^{−ν−½}",
            Elliptic => "Σ I₀K₀(πn(√α±√β)) equals a regularized series of complete elliptic integrals",
            WatsonK0 => "2Σ K₀(nβ) equals π/β plus a regularized algebraic series and logarithms",
            ZetaLog => "closed logarithmic form equals (1/√2) Σ log((2n²+α)/(2n²+β)) plus log(α/β)/(2√2)",
        }
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        use IdentityId::*;
        match self {
            T1 | RkK | SigmaK | TauK | ChiOddK | ChiEvenK | IdealK => &["nu", "c", "r"],
            Guinand => &["s", "alpha", "beta"],
            T2 | Rk2F1 | Tau2F1 | ChiOdd2F1 | ChiEven2F1 | Zeta2F1 => &["nu", "alpha", "beta"],
            CorKTransform => &["nu", "s"],
            TauSinh | ChiOddSinh | ChiEvenLog | Elliptic | ZetaLog => &["alpha", "beta"],
            TauExp => &["s"],
            WatsonEq4 => &["nu", "z"],
            WatsonK0 => &["beta"],
        }
    }

    pub fn sampling(&self) -> Sampling {
        use IdentityId::*;
        match self {
            T1 | RkK | SigmaK | TauK | ChiOddK | ChiEvenK | IdealK => Sampling::Kernel,
            Guinand => Sampling::Reciprocal,
            CorKTransform => Sampling::Transform,
            TauExp => Sampling::Single("s", 2.0, 8.0),
            WatsonEq4 => Sampling::Watson,
            WatsonK0 => Sampling::Single("beta", 0.5, 3.0),
            _ => Sampling::Pair,
        }
    }

    /// Draws one in-box parameter point.
    pub fn sample(&self, variant: &Variant, rng: &mut ChaCha8Rng) -> IdentityParams {
        let mut p = IdentityParams::default();
        let (nlo, nhi) = variant.nu;
        match self.sampling() {
            Sampling::Kernel => {
                p.nu = uniform(rng, nlo, nhi);
                p.c = uniform(rng, 0.3, 2.0);
                p.r = uniform(rng, 0.3, 2.0);
            }
            Sampling::Pair => {
                p.beta = uniform(rng, 0.5, 2.0);
                p.alpha = uniform(rng, p.beta + 0.5, 6.0);
                if self.param_names().contains(&"nu") {
                    p.nu = uniform(rng, nlo, nhi);
                }
            }
            Sampling::Transform => {
                p.nu = uniform(rng, nlo, nhi);
                p.s = uniform(rng, 2.0, 6.0);
            }
            Sampling::Reciprocal => {
                p.alpha = uniform(rng, 1.0, 6.0);
                p.beta = PI * PI / p.alpha;
            }
            Sampling::Watson => {
                p.nu = uniform(rng, nlo.max(1.0), nhi.min(3.0));
                p.z = uniform(rng, 0.5, 3.0);
            }
            Sampling::Single(name, lo, hi) => p.set(name, uniform(rng, lo, hi)),
        }
        if let Some(s) = variant.fixed_s {
            p.s = s;
        }
        p
    }

    pub fn comparison(&self) -> Comparison {
        match self {
            IdentityId::TauExp => Comparison::Relative(self.relative_tol()),
            _ => Comparison::Absolute,
        }
    }

    /// Relative tolerance for identities compared relatively.
    pub fn relative_tol(&self) -> f64 {
        1e-6
    }

    /// Truncation tolerance handed to each side.
    pub(crate) fn side_tolerance(&self, tol: f64, ctx: &Ctx) -> Result<f64> {
        Ok(match self {
            // both sides are of size ~e^{−s}
            IdentityId::TauExp => self.relative_tol() * 1e-6 * (-ctx.p.s).exp(),
            _ => tol,
        })
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown identity {s}")))
    }
}

pub(crate) type SideFn = fn(&Ctx, f64) -> Result<Side>;

pub(crate) fn sides(id: IdentityId) -> (SideFn, SideFn) {
    use IdentityId::*;
    match id {
        T1 => (first::t1_lhs, first::t1_rhs),
        RkK | SigmaK | TauK | ChiOddK | ChiEvenK | IdealK => (first::kseries_lhs, first::kseries_rhs),
        Guinand => (first::guinand_lhs, first::guinand_rhs),
        CorKTransform => (first::cor_lhs, first::cor_rhs),
        T2 => (second::t2_lhs, second::t2_rhs),
        Rk2F1 => (second::rk2f1_lhs, second::rk2f1_rhs),
        Tau2F1 => (second::tau2f1_lhs, second::tau2f1_rhs),
        TauSinh => (second::tau_sinh_lhs, second::tau_sinh_rhs),
        TauExp => (second::tau_exp_lhs, second::tau_exp_rhs),
        ChiOdd2F1 => (second::chi_odd_2f1_lhs, second::chi_odd_2f1_rhs),
        ChiOddSinh => (second::chi_odd_sinh_lhs, second::chi_odd_sinh_rhs),
        ChiEven2F1 => (second::chi_even_2f1_lhs, second::chi_even_2f1_rhs),
        ChiEvenLog => (second::chi_even_log_lhs, second::chi_even_log_rhs),
        Zeta2F1 => (second::zeta_2f1_lhs, second::zeta_2f1_rhs),
        WatsonEq4 => (classical::watson_eq4_lhs, classical::watson_eq4_rhs),
        Elliptic => (classical::elliptic_lhs, classical::elliptic_rhs),
        WatsonK0 => (classical::watson_k0_lhs, classical::watson_k0_rhs),
        ZetaLog => (classical::zeta_log_lhs, classical::zeta_log_rhs),
    }
}

fn expect_family(ctx: &Ctx, allowed: &[Family]) -> Result<()> {
    let sys = ctx.system()?;
    if allowed.contains(&sys.family) {
        Ok(())
    } else {
        Err(Error::Domain(format!("identity does not apply to {}", sys.family)))
    }
}

fn ordered_pair(p: &IdentityParams) -> Result<()> {
    require(p.beta > 0.0 && p.alpha > p.beta, "α > β > 0")
}

pub(crate) fn check_hypotheses(id: IdentityId, ctx: &Ctx) -> Result<()> {
    use IdentityId::*;
    let p = &ctx.p;
    match id {
        T1 => {
            ctx.system()?;
            require(p.nu > -1.0, "ν > −1")?;
            require(p.c > 0.0 && p.r > 0.0, "c > 0 and r > 0")
        }
        RkK | SigmaK | TauK | ChiOddK | ChiEvenK | IdealK => {
            let fam = match id {
                RkK => Family::Rk,
                SigmaK => Family::Sigma,
                TauK => Family::Tau,
                ChiOddK => Family::ChiOdd,
                ChiEvenK => Family::ChiEven,
                _ => Family::Ideal,
            };
            expect_family(ctx, &[fam])?;
            require(p.c > 0.0 && p.r > 0.0, "c > 0 and r > 0")
        }
        Guinand => {
            require(p.alpha > 0.0 && p.beta > 0.0, "α > 0 and β > 0")?;
            require((p.alpha * p.beta - PI * PI).abs() <= 1e-12 * PI * PI, "αβ = π²")?;
            require(p.s >= 0.0 && (p.s - 1.0).abs() > 1e-9, "s ≥ 0 and s ≠ 1")
        }
        T2 | CorKTransform => {
            let sys = ctx.system()?;
            require(p.nu > -1.0, "ν > −1")?;
            require(sys.delta + p.nu + 1.0 > sys.sigma_a_star, "δ + ν + 1 > σ_a*")?;
            if id == T2 {
                ordered_pair(p)
            } else {
                require(p.s > 0.0, "s > 0")
            }
        }
        Rk2F1 => {
            expect_family(ctx, &[Family::Rk])?;
            require(p.nu > 0.0, "ν > 0")?;
            ordered_pair(p)
        }
        Tau2F1 | TauSinh => {
            expect_family(ctx, &[Family::Tau])?;
            require(p.nu > -1.0, "ν > −1")?;
            ordered_pair(p)
        }
        TauExp => {
            expect_family(ctx, &[Family::Tau])?;
            require(p.s > 0.0, "s > 0")
        }
        ChiOdd2F1 | ChiOddSinh => {
            expect_family(ctx, &[Family::ChiOdd])?;
            require(p.nu > -1.0, "ν > −1")?;
            ordered_pair(p)
        }
        ChiEven2F1 | ChiEvenLog => {
            expect_family(ctx, &[Family::ChiEven])?;
            require(p.nu > -1.0, "ν > −1")?;
            ordered_pair(p)
        }
        Zeta2F1 => {
            require(p.nu > -1.0, "ν > −1")?;
            ordered_pair(p)
        }
        WatsonEq4 => require(p.nu > 0.0 && p.z > 0.0, "ν > 0 and z > 0"),
        Elliptic | ZetaLog => ordered_pair(p),
        WatsonK0 => require(p.beta > 0.0, "β > 0"),
    }
}
