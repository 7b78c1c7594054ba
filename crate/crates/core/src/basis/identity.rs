//! The identity catalog and the verification driver.
//!
//! Every identity is registered under a stable id. A check evaluates both
//! sides of the identity independently and demands exact equality of
//! canonical forms, either over the rational function field (symbolic mode)
//! or at seeded random admissible (q, lambda) points in exact rational
//! arithmetic (numeric mode). One report is produced per identity-parameter
//! combination; a failing report carries a witness with both sides.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::carlitz;
use crate::families::{self, FamilyId};
use crate::qcore::{Poly, QContext};
use crate::random;
use crate::scalars::{Field, RatFunc, Rational};

use super::{
    expand_in_fe, expand_in_fe_order_r, expand_in_fe_order_r_multinomial,
    functional_bernoulli_identity, orthogonality_pairing, reconstruct, BasisExpansion,
    VerifyError,
};

/// Identities in the registered catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Theorem2_1,
    Theorem2_3,
    Theorem2_4,
    Theorem2_6,
    Theorem2_7,
    Theorem2_8,
    Theorem2_9,
    Theorem2_10,
    Eq2_14,
    Eq2_23,
    XnExpansion,
    EExpansion,
    Eq2_39,
    RemarkOrderRBernoulli,
    Orthogonality,
    Lemma2_2,
    BernoulliAtOne,
    EulerAtOne,
    RoundTrip,
    EulerDegeneration,
    ClassicalLimit,
    CarlitzDual,
    CarlitzExpand,
    PerturbedFixture,
}

impl IdentityId {
    /// Catalog order; the hidden sanity fixture is excluded from `all`.
    pub const ALL: [IdentityId; 23] = [
        IdentityId::Theorem2_1,
        IdentityId::Theorem2_3,
        IdentityId::Theorem2_4,
        IdentityId::Theorem2_6,
        IdentityId::Theorem2_7,
        IdentityId::Theorem2_8,
        IdentityId::Theorem2_9,
        IdentityId::Theorem2_10,
        IdentityId::Eq2_14,
        IdentityId::Eq2_23,
        IdentityId::XnExpansion,
        IdentityId::EExpansion,
        IdentityId::Eq2_39,
        IdentityId::RemarkOrderRBernoulli,
        IdentityId::Orthogonality,
        IdentityId::Lemma2_2,
        IdentityId::BernoulliAtOne,
        IdentityId::EulerAtOne,
        IdentityId::RoundTrip,
        IdentityId::EulerDegeneration,
        IdentityId::ClassicalLimit,
        IdentityId::CarlitzDual,
        IdentityId::CarlitzExpand,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Theorem2_1 => "theorem-2.1",
            IdentityId::Theorem2_3 => "theorem-2.3",
            IdentityId::Theorem2_4 => "theorem-2.4",
            IdentityId::Theorem2_6 => "theorem-2.6",
            IdentityId::Theorem2_7 => "theorem-2.7",
            IdentityId::Theorem2_8 => "theorem-2.8",
            IdentityId::Theorem2_9 => "theorem-2.9",
            IdentityId::Theorem2_10 => "theorem-2.10",
            IdentityId::Eq2_14 => "eq-2.14",
            IdentityId::Eq2_23 => "eq-2.23",
            IdentityId::XnExpansion => "xn-expansion",
            IdentityId::EExpansion => "e-expansion",
            IdentityId::Eq2_39 => "eq-2.39",
            IdentityId::RemarkOrderRBernoulli => "remark",
            IdentityId::Orthogonality => "orthogonality",
            IdentityId::Lemma2_2 => "lemma-2.2",
            IdentityId::BernoulliAtOne => "bernoulli-at-one",
            IdentityId::EulerAtOne => "euler-at-one",
            IdentityId::RoundTrip => "round-trip",
            IdentityId::EulerDegeneration => "euler-degeneration",
            IdentityId::ClassicalLimit => "classical-limit",
            IdentityId::CarlitzDual => "carlitz-dual",
            IdentityId::CarlitzExpand => "carlitz-expand",
            IdentityId::PerturbedFixture => "fixture-perturbed",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            IdentityId::Theorem2_1 => {
                "value relation at x = 1: H_n(1|lambda) - lambda H_n(lambda) = (1-lambda) delta_{0,n}"
            }
            IdentityId::Theorem2_3 => {
                "backward recurrence for the Frobenius-Euler numbers equals triangular series inversion"
            }
            IdentityId::Theorem2_4 => {
                "the (e_q(t)-1)/t functional on H_n equals its Jackson integral over [0,1]"
            }
            IdentityId::Theorem2_6 => {
                "expansion of q-Bernoulli polynomials in the Frobenius-Euler basis"
            }
            IdentityId::Theorem2_7 => {
                "order-r expansion coefficients: functional route equals the closed multinomial formula"
            }
            IdentityId::Theorem2_8 => {
                "order-r numbers: series power equals the q-multinomial convolution of order-1 numbers"
            }
            IdentityId::Theorem2_9 => {
                "H^(r)_n expands over the order-1 basis with H^(r-1) number weights"
            }
            IdentityId::Theorem2_10 => {
                "expansion of H_n in the order-r basis via the closed triple sum"
            }
            IdentityId::Eq2_14 => {
                "the Jackson integral of H_n over [x, x+y] telescopes through H_{n+1}"
            }
            IdentityId::Eq2_23 => "expansion coefficients of x^n in the Frobenius-Euler basis",
            IdentityId::XnExpansion => {
                "x^n rebuilt from the Frobenius-Euler basis (sign normalized from the coefficient formula)"
            }
            IdentityId::EExpansion => {
                "expansion of q-Euler polynomials in the Frobenius-Euler basis (q-binomial weights)"
            }
            IdentityId::Eq2_39 => {
                "order reduction: H^(r)_n(1|lambda) - lambda H^(r)_n(lambda) = (1-lambda) H^(r-1)_n(lambda)"
            }
            IdentityId::RemarkOrderRBernoulli => {
                "expansion of order-r q-Bernoulli polynomials in the order-r basis (r-th kernel power convention)"
            }
            IdentityId::Orthogonality => {
                "orthogonality: <kernel^r t^k | H^(r)_n> = [n]_q! delta_{n,k}"
            }
            IdentityId::Lemma2_2 => {
                "the inverted kernel acts on x^n as H_n; t acts as the [n]_q shift-down"
            }
            IdentityId::BernoulliAtOne => "B_n(1) - B_n = delta_{n,1}",
            IdentityId::EulerAtOne => "E_n(1) + E_n = 2 delta_{n,0}",
            IdentityId::RoundTrip => {
                "reconstruct after expand is the identity on random polynomials"
            }
            IdentityId::EulerDegeneration => "H_n(x|-1) = E_n(x)",
            IdentityId::ClassicalLimit => {
                "q -> 1 limits: B_2 -> 1/6 and Carlitz beta_n -> the classical Bernoulli numbers"
            }
            IdentityId::CarlitzDual => {
                "Carlitz polynomials: closed form equals the number-expansion route"
            }
            IdentityId::CarlitzExpand => {
                "the Carlitz-basis solver reconstructs its input exactly"
            }
            IdentityId::PerturbedFixture => {
                "deliberately corrupted value relation; must fail (harness sanity fixture)"
            }
        }
    }

    /// LaTeX statement for rendered catalog listings.
    pub fn statement_latex(self) -> &'static str {
        match self {
            IdentityId::Theorem2_1 => {
                "H_{n,q}(1\\mid\\lambda)-\\lambda H_{n,q}(\\lambda)=(1-\\lambda)\\delta_{0,n}"
            }
            IdentityId::Theorem2_3 => {
                "H_{n,q}(\\lambda)=\\frac{1}{\\lambda-1}\\sum_{l=0}^{n-1}\\binom{n}{l}_q H_{l,q}(\\lambda)"
            }
            IdentityId::Theorem2_4 => {
                "\\left\\langle\\frac{e_q(t)-1}{t}\\,\\middle|\\,H_{n,q}(x\\mid\\lambda)\\right\\rangle=\\int_0^1 H_{n,q}(u\\mid\\lambda)\\,d_q u"
            }
            IdentityId::Theorem2_6 => {
                "B_{n,q}(x)=\\frac{1}{1-\\lambda}\\sum_{k=0}^{n}\\binom{n}{k}_q\\left\\{B_{n-k,q}(1)-\\lambda B_{n-k,q}\\right\\}H_{k,q}(x\\mid\\lambda)"
            }
            IdentityId::Theorem2_7 => {
                "C_k^r=\\frac{1}{[k]_q!(1-\\lambda)^r}\\sum_{l\\ge 0}\\sum_{j=0}^{r}\\sum_{l_1+\\cdots+l_j=l}\\frac{\\binom{r}{j}(-\\lambda)^{r-j}}{[l_1]_q!\\cdots[l_j]_q!}\\,p^{(k+l)}(0)"
            }
            IdentityId::Theorem2_8 => {
                "H^{(r)}_{n,q}(\\lambda)=\\sum_{i_1+\\cdots+i_r=n}\\binom{n}{i_1,\\ldots,i_r}_q H_{i_1,q}(\\lambda)\\cdots H_{i_r,q}(\\lambda)"
            }
            IdentityId::Theorem2_9 => {
                "H^{(r)}_{n,q}(x\\mid\\lambda)=\\sum_{k=0}^{n}\\binom{n}{k}_q H^{(r-1)}_{n-k,q}(\\lambda)H_{k,q}(x\\mid\\lambda)"
            }
            IdentityId::Theorem2_10 => {
                "H_{n,q}(x\\mid\\lambda)=\\frac{1}{(1-\\lambda)^r}\\sum_{k=0}^{n}\\left\\{\\sum_{m=0}^{n-k}\\sum_{l=0}^{r}\\sum_{i_1+\\cdots+i_l=m}\\binom{r}{l}(-\\lambda)^{r-l}\\binom{m}{i_1,\\ldots,i_l}_q\\binom{m+k}{m}_q\\binom{n}{m+k}_q H_{n-m-k,q}(\\lambda)\\right\\}H^{(r)}_{k,q}(x\\mid\\lambda)"
            }
            IdentityId::Eq2_14 => {
                "\\int_x^{x+y}H_{n,q}(u\\mid\\lambda)\\,d_qu=\\frac{1}{[n+1]_q}\\left\\{H_{n+1,q}(x+y\\mid\\lambda)-H_{n+1,q}(x\\mid\\lambda)\\right\\}"
            }
            IdentityId::Eq2_23 => {
                "C_k=\\frac{1}{1-\\lambda}\\binom{n}{k}_q-\\frac{\\lambda}{1-\\lambda}\\binom{n}{k}_q 0^{n-k}"
            }
            IdentityId::XnExpansion => {
                "x^n=\\frac{1}{1-\\lambda}\\sum_{k=0}^{n-1}\\binom{n}{k}_q H_{k,q}(x\\mid\\lambda)+H_{n,q}(x\\mid\\lambda)"
            }
            IdentityId::EExpansion => {
                "E_{n,q}(x)=\\frac{1}{1-\\lambda}\\sum_{k=0}^{n}\\binom{n}{k}_q\\left\\{E_{n-k,q}(1)-\\lambda E_{n-k,q}\\right\\}H_{k,q}(x\\mid\\lambda)"
            }
            IdentityId::Eq2_39 => {
                "H^{(r)}_{n,q}(1\\mid\\lambda)-\\lambda H^{(r)}_{n,q}(\\lambda)=(1-\\lambda)H^{(r-1)}_{n,q}(\\lambda)"
            }
            IdentityId::RemarkOrderRBernoulli => {
                "B^{(r)}_{n,q}(x)=\\frac{1}{(1-\\lambda)^r}\\sum_{k=0}^{n}\\left\\{\\sum_{m=0}^{n-k}\\sum_{l=0}^{r}\\sum_{i_1+\\cdots+i_l=m}\\binom{r}{l}(-\\lambda)^{r-l}\\binom{m}{i_1,\\ldots,i_l}_q\\binom{m+k}{m}_q\\binom{n}{m+k}_q B^{(r)}_{n-m-k,q}\\right\\}H^{(r)}_{k,q}(x\\mid\\lambda)"
            }
            IdentityId::Orthogonality => {
                "\\left\\langle\\left(\\frac{e_q(t)-\\lambda}{1-\\lambda}\\right)^r t^k\\,\\middle|\\,H^{(r)}_{n,q}(x\\mid\\lambda)\\right\\rangle=[n]_q!\\,\\delta_{n,k}"
            }
            IdentityId::Lemma2_2 => {
                "H_{n,q}(x\\mid\\lambda)=\\frac{1-\\lambda}{e_q(t)-\\lambda}x^n,\\quad tH_{n,q}(x\\mid\\lambda)=[n]_q H_{n-1,q}(x\\mid\\lambda)"
            }
            IdentityId::BernoulliAtOne => "B_{n,q}(1)-B_{n,q}=\\delta_{n,1}",
            IdentityId::EulerAtOne => "E_{n,q}(1)+E_{n,q}=2\\,\\delta_{n,0}",
            IdentityId::RoundTrip => {
                "p(x)=\\sum_{k=0}^{n}C_k H^{(r)}_{k,q}(x\\mid\\lambda)\\ \\text{with}\\ C_k\\ \\text{from the expansion of}\\ p"
            }
            IdentityId::EulerDegeneration => "H_{n,q}(x\\mid -1)=E_{n,q}(x)",
            IdentityId::ClassicalLimit => {
                "\\lim_{q\\to 1}B_{2,q}=\\tfrac{1}{6},\\qquad \\lim_{q\\to 1}\\beta_{n,q}=B_n"
            }
            IdentityId::CarlitzDual => {
                "\\beta_{n,q}(x)=\\sum_{l=0}^{n}\\binom{n}{l}q^{lx}\\beta_{l,q}[x]_q^{n-l}"
            }
            IdentityId::CarlitzExpand => {
                "p([x]_q)=\\sum_{k=0}^{n}C_{k,q}\\,\\beta_{k,q}(x)"
            }
            IdentityId::PerturbedFixture => "\\text{corrupted fixture}",
        }
    }

    /// Hidden ids are resolvable by name but excluded from `all`.
    pub fn hidden(self) -> bool {
        matches!(self, IdentityId::PerturbedFixture)
    }

    /// Identities that are exact statements over the rational functions of q
    /// alone; they run the same exact check whatever mode is requested.
    pub fn exact_over_q(self) -> bool {
        matches!(
            self,
            IdentityId::ClassicalLimit | IdentityId::CarlitzDual | IdentityId::CarlitzExpand
        )
    }

    pub fn from_name(name: &str) -> Result<Self, VerifyError> {
        Self::ALL
            .iter()
            .copied()
            .chain(std::iter::once(IdentityId::PerturbedFixture))
            .find(|id| id.name() == name)
            .ok_or_else(|| VerifyError::UnknownIdentity(name.to_string()))
    }
}

/// Which scalar field the suite runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerifyMode {
    #[serde(rename = "symbolic")]
    Symbolic,
    #[serde(rename = "numeric")]
    Numeric,
}

/// Bounds and randomness for a suite run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_n: u32,
    pub max_r: u32,
    pub mode: VerifyMode,
    /// Number of random (q, lambda) points in numeric mode.
    pub trials: u32,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 6,
            max_r: 3,
            mode: VerifyMode::Symbolic,
            trials: 5,
            seed: 42,
        }
    }
}

/// Outcome of a single identity-parameter combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReportStatus {
    ExactPass,
    Fail,
}

/// One report per identity-parameter combination. A `Fail` carries a
/// witness with the inputs and both sides' values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Value,
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::ExactPass
    }
}

/// True when every report passed.
pub fn suite_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed())
}

struct Recorder {
    identity: IdentityId,
    base: Vec<(String, Value)>,
    reports: Vec<VerificationReport>,
}

impl Recorder {
    fn new(identity: IdentityId, base: Vec<(String, Value)>) -> Self {
        Recorder {
            identity,
            base,
            reports: Vec::new(),
        }
    }

    fn params(&self, extra: &[(&str, Value)]) -> Value {
        let mut map = serde_json::Map::new();
        for (k, v) in &self.base {
            map.insert(k.clone(), v.clone());
        }
        for (k, v) in extra {
            map.insert((*k).to_string(), v.clone());
        }
        Value::Object(map)
    }

    fn record(&mut self, params: Value, witness: Option<Value>, elapsed_ms: u64) {
        let status = if witness.is_none() {
            ReportStatus::ExactPass
        } else {
            ReportStatus::Fail
        };
        self.reports.push(VerificationReport {
            identity: self.identity.name().to_string(),
            params,
            status,
            witness,
            elapsed_ms,
        });
    }

    /// Compares two scalars produced by independent routes.
    fn check<K: Field>(&mut self, extra: &[(&str, Value)], f: impl FnOnce() -> (K, K)) {
        let t0 = Instant::now();
        let (lhs, rhs) = f();
        let elapsed = t0.elapsed().as_millis() as u64;
        let witness = (lhs != rhs).then(|| {
            json!({
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
            })
        });
        self.record(self.params(extra), witness, elapsed);
    }

    /// Compares two polynomials.
    fn check_poly<K: Field>(
        &mut self,
        extra: &[(&str, Value)],
        f: impl FnOnce() -> (Poly<K>, Poly<K>),
    ) {
        let t0 = Instant::now();
        let (lhs, rhs) = f();
        let elapsed = t0.elapsed().as_millis() as u64;
        let witness = (lhs != rhs).then(|| {
            json!({
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
            })
        });
        self.record(self.params(extra), witness, elapsed);
    }

    /// Compares two coefficient vectors.
    fn check_vec<K: Field>(
        &mut self,
        extra: &[(&str, Value)],
        f: impl FnOnce() -> (Vec<K>, Vec<K>),
    ) {
        let t0 = Instant::now();
        let (lhs, rhs) = f();
        let elapsed = t0.elapsed().as_millis() as u64;
        let witness = (lhs != rhs).then(|| {
            json!({
                "lhs": lhs.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "rhs": rhs.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })
        });
        self.record(self.params(extra), witness, elapsed);
    }
}

/// Runs one identity under the configuration; one report per parameter
/// combination.
pub fn run_identity(id: IdentityId, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let stream_base = (id as u64) << 8;
    if id.exact_over_q() {
        let ctx = QContext::symbolic();
        let mut rec = Recorder::new(id, vec![("mode".into(), json!("symbolic"))]);
        check_generic(id, &ctx, cfg, cfg.seed, stream_base, &mut rec);
        return rec.reports;
    }
    if id == IdentityId::EulerDegeneration {
        return match cfg.mode {
            VerifyMode::Symbolic => {
                let ctx = QContext::with_scalars(RatFunc::var_q(), RatFunc::from_int(-1));
                let mut rec = Recorder::new(
                    id,
                    vec![
                        ("mode".into(), json!("symbolic")),
                        ("lambda".into(), json!("-1")),
                    ],
                );
                check_generic(id, &ctx, cfg, cfg.seed, stream_base, &mut rec);
                rec.reports
            }
            VerifyMode::Numeric => {
                let mut reports = Vec::new();
                for trial in 0..cfg.trials {
                    let mut rng = random::rng(cfg.seed, stream_base | trial as u64);
                    let (q0, _) = random::numeric_point(&mut rng);
                    let lambda0 = Rational::from_integer(-1);
                    let ctx = QContext::numeric(q0.clone(), lambda0)
                        .expect("admissible random point");
                    let mut rec = Recorder::new(
                        id,
                        vec![
                            ("mode".into(), json!("numeric")),
                            ("trial".into(), json!(trial)),
                            ("q".into(), json!(q0.to_string())),
                            ("lambda".into(), json!("-1")),
                        ],
                    );
                    check_generic(id, &ctx, cfg, cfg.seed, stream_base | trial as u64, &mut rec);
                    reports.extend(rec.reports);
                }
                reports
            }
        };
    }
    match cfg.mode {
        VerifyMode::Symbolic => {
            let ctx = QContext::symbolic();
            let mut rec = Recorder::new(id, vec![("mode".into(), json!("symbolic"))]);
            check_generic(id, &ctx, cfg, cfg.seed, stream_base, &mut rec);
            rec.reports
        }
        VerifyMode::Numeric => {
            let mut reports = Vec::new();
            for trial in 0..cfg.trials {
                let mut rng = random::rng(cfg.seed, stream_base | trial as u64);
                let (q0, lambda0) = random::numeric_point(&mut rng);
                let ctx = QContext::numeric(q0.clone(), lambda0.clone())
                    .expect("admissible random point");
                let mut rec = Recorder::new(
                    id,
                    vec![
                        ("mode".into(), json!("numeric")),
                        ("trial".into(), json!(trial)),
                        ("q".into(), json!(q0.to_string())),
                        ("lambda".into(), json!(lambda0.to_string())),
                    ],
                );
                check_generic(id, &ctx, cfg, cfg.seed, stream_base | trial as u64, &mut rec);
                reports.extend(rec.reports);
            }
            reports
        }
    }
}

/// Runs a set of identities (in catalog order, parallel across identities).
pub fn run_suite(ids: &[IdentityId], cfg: &SuiteConfig) -> Vec<VerificationReport> {
    ids.par_iter()
        .map(|id| run_identity(*id, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn delta<K: Field>(a: usize, b: usize) -> K {
    if a == b {
        K::one()
    } else {
        K::zero()
    }
}

/// The closed triple-sum coefficients shared by the order-r expansions of
/// `H_n` (with order-1 numbers) and `B^(r)_n` (with order-r numbers).
fn triple_sum_coeffs<K: Field>(ctx: &QContext<K>, n: usize, r: u32, numbers: &[K]) -> Vec<K> {
    let one_minus_lambda_pow_inv = (K::one() - ctx.lambda().clone())
        .pow_u(r)
        .inv()
        .expect("lambda != 1");
    let minus_lambda = -ctx.lambda().clone();
    (0..=n)
        .map(|k| {
            let mut acc = K::zero();
            for m in 0..=(n - k) {
                let mut weight = K::zero();
                for l in 0..=r {
                    let binom_rl = num_integer::binomial(
                        num_bigint::BigInt::from(r),
                        num_bigint::BigInt::from(l),
                    );
                    let mut inner = K::zero();
                    for comp in families::weak_compositions(m as u32, l) {
                        inner = inner
                            + ctx
                                .q_multinomial(m as u32, &comp)
                                .expect("composition parts sum to m");
                    }
                    weight = weight
                        + K::from_rational(Rational::from_bigint(binom_rl))
                            * minus_lambda.pow_u(r - l)
                            * inner;
                }
                let term = weight
                    * ctx.q_binomial((m + k) as u32, m as i64)
                    * ctx.q_binomial(n as u32, (m + k) as i64)
                    * numbers[n - m - k].clone();
                acc = acc + term;
            }
            acc * one_minus_lambda_pow_inv.clone()
        })
        .collect()
}

fn check_generic<K: Field>(
    id: IdentityId,
    ctx: &QContext<K>,
    cfg: &SuiteConfig,
    seed: u64,
    stream: u64,
    rec: &mut Recorder,
) {
    let max_n = cfg.max_n as usize;
    let max_r = cfg.max_r.max(1);
    match id {
        IdentityId::Theorem2_1 => {
            let table = families::frobenius_euler_numbers(ctx, max_n);
            for n in 0..=max_n {
                rec.check(&[("n", json!(n))], || {
                    let p = families::poly_from_numbers(ctx, &table.values, n);
                    let lhs =
                        p.eval(&K::one()) - ctx.lambda().clone() * table.values[n].clone();
                    let rhs = (K::one() - ctx.lambda().clone()) * delta::<K>(0, n);
                    (lhs, rhs)
                });
            }
        }
        IdentityId::Theorem2_3 => {
            let a = families::frobenius_euler_numbers(ctx, max_n);
            let b = families::frobenius_euler_numbers_by_recurrence(ctx, max_n);
            for n in 0..=max_n {
                rec.check(&[("n", json!(n))], || {
                    (a.values[n].clone(), b.values[n].clone())
                });
            }
        }
        IdentityId::Theorem2_4 => {
            for n in 0..=max_n {
                rec.check(&[("n", json!(n))], || functional_bernoulli_identity(ctx, n));
            }
        }
        IdentityId::Theorem2_6 => {
            let b_table = families::q_bernoulli_numbers(ctx, max_n);
            let one_minus_lambda_inv = (K::one() - ctx.lambda().clone())
                .inv()
                .expect("lambda != 1");
            for n in 0..=max_n {
                let coeffs: Vec<K> = (0..=n)
                    .map(|k| {
                        let bp = families::poly_from_numbers(ctx, &b_table.values, n - k);
                        ctx.q_binomial(n as u32, k as i64)
                            * (bp.eval(&K::one())
                                - ctx.lambda().clone() * b_table.values[n - k].clone())
                            * one_minus_lambda_inv.clone()
                    })
                    .collect();
                let b_poly = families::poly_from_numbers(ctx, &b_table.values, n);
                rec.check_poly(&[("n", json!(n)), ("part", json!("reconstruct"))], || {
                    let e = BasisExpansion {
                        basis: FamilyId::frobenius(),
                        coeffs: coeffs.clone(),
                    };
                    (reconstruct(ctx, &e), b_poly.clone())
                });
                rec.check_vec(&[("n", json!(n)), ("part", json!("coefficients"))], || {
                    (expand_in_fe(ctx, &b_poly).coeffs, coeffs.clone())
                });
            }
        }
        IdentityId::Theorem2_7 => {
            let mut rng = random::rng(seed, stream ^ 0x2700);
            for r in 1..=max_r {
                for degree in 0..=max_n {
                    let p: Poly<K> = random::poly(&mut rng, degree);
                    rec.check_vec(&[("r", json!(r)), ("degree", json!(degree))], || {
                        (
                            expand_in_fe_order_r(ctx, &p, r).coeffs,
                            expand_in_fe_order_r_multinomial(ctx, &p, r).coeffs,
                        )
                    });
                }
            }
        }
        IdentityId::Theorem2_8 => {
            for r in 1..=max_r {
                let a = families::frobenius_euler_numbers_order_r(ctx, max_n, r);
                let b = families::frobenius_euler_numbers_order_r_by_convolution(ctx, max_n, r);
                for n in 0..=max_n {
                    rec.check(&[("r", json!(r)), ("n", json!(n))], || {
                        (a.values[n].clone(), b.values[n].clone())
                    });
                }
            }
        }
        IdentityId::Theorem2_9 => {
            for r in 1..=max_r {
                let prev = if r == 1 {
                    let mut v = vec![K::zero(); max_n + 1];
                    v[0] = K::one();
                    v
                } else {
                    families::frobenius_euler_numbers_order_r(ctx, max_n, r - 1).values
                };
                for n in 0..=max_n {
                    rec.check_poly(&[("r", json!(r)), ("n", json!(n))], || {
                        let coeffs: Vec<K> = (0..=n)
                            .map(|k| {
                                ctx.q_binomial(n as u32, k as i64) * prev[n - k].clone()
                            })
                            .collect();
                        let e = BasisExpansion {
                            basis: FamilyId::frobenius(),
                            coeffs,
                        };
                        (
                            reconstruct(ctx, &e),
                            families::frobenius_euler_poly_order_r(ctx, n, r),
                        )
                    });
                }
            }
        }
        IdentityId::Theorem2_10 => {
            let h_numbers = families::frobenius_euler_numbers(ctx, max_n).values;
            for r in 1..=max_r {
                for n in 0..=max_n {
                    let coeffs = triple_sum_coeffs(ctx, n, r, &h_numbers);
                    let h_poly = families::poly_from_numbers(ctx, &h_numbers, n);
                    rec.check_poly(
                        &[("r", json!(r)), ("n", json!(n)), ("part", json!("reconstruct"))],
                        || {
                            let e = BasisExpansion {
                                basis: FamilyId::frobenius_r(r),
                                coeffs: coeffs.clone(),
                            };
                            (reconstruct(ctx, &e), h_poly.clone())
                        },
                    );
                    rec.check_vec(
                        &[("r", json!(r)), ("n", json!(n)), ("part", json!("coefficients"))],
                        || (expand_in_fe_order_r(ctx, &h_poly, r).coeffs, coeffs.clone()),
                    );
                }
            }
        }
        IdentityId::Eq2_14 => {
            let table = families::frobenius_euler_numbers(ctx, max_n + 1);
            let mut rng = random::rng(seed, stream ^ 0x1400);
            for n in 0..=max_n {
                for point in 0..3u32 {
                    let x0 = K::from_rational(random::rational(&mut rng));
                    let y0 = K::from_rational(random::nonzero_rational(&mut rng));
                    rec.check(
                        &[
                            ("n", json!(n)),
                            ("point", json!(point)),
                            ("x0", json!(x0.to_string())),
                            ("y0", json!(y0.to_string())),
                        ],
                        || {
                            let h_n = families::poly_from_numbers(ctx, &table.values, n);
                            let h_next = families::poly_from_numbers(ctx, &table.values, n + 1);
                            let upper = x0.clone() + y0.clone();
                            let lhs = h_n.q_integral(ctx, &x0, &upper);
                            let rhs = (h_next.eval(&upper) - h_next.eval(&x0))
                                * ctx
                                    .q_int(n as u32 + 1)
                                    .inv()
                                    .expect("[n+1]_q invertible");
                            (lhs, rhs)
                        },
                    );
                }
            }
        }
        IdentityId::Eq2_23 => {
            let one_minus_lambda_inv = (K::one() - ctx.lambda().clone())
                .inv()
                .expect("lambda != 1");
            for n in 0..=max_n {
                rec.check_vec(&[("n", json!(n))], || {
                    let expect: Vec<K> = (0..=n)
                        .map(|k| {
                            // 0^(n-k) keeps only the k = n term of the lambda part
                            let first =
                                ctx.q_binomial(n as u32, k as i64) * one_minus_lambda_inv.clone();
                            if k == n {
                                first.clone()
                                    - ctx.lambda().clone()
                                        * one_minus_lambda_inv.clone()
                                        * ctx.q_binomial(n as u32, k as i64)
                            } else {
                                first
                            }
                        })
                        .collect();
                    (expand_in_fe(ctx, &Poly::x_pow(n as u32)).coeffs, expect)
                });
            }
        }
        IdentityId::XnExpansion => {
            let one_minus_lambda_inv = (K::one() - ctx.lambda().clone())
                .inv()
                .expect("lambda != 1");
            for n in 0..=max_n {
                rec.check_poly(&[("n", json!(n))], || {
                    let coeffs: Vec<K> = (0..=n)
                        .map(|k| {
                            if k == n {
                                K::one()
                            } else {
                                ctx.q_binomial(n as u32, k as i64) * one_minus_lambda_inv.clone()
                            }
                        })
                        .collect();
                    let e = BasisExpansion {
                        basis: FamilyId::frobenius(),
                        coeffs,
                    };
                    (reconstruct(ctx, &e), Poly::x_pow(n as u32))
                });
            }
        }
        IdentityId::EExpansion => {
            let e_table = families::q_euler_numbers(ctx, max_n);
            let one_minus_lambda_inv = (K::one() - ctx.lambda().clone())
                .inv()
                .expect("lambda != 1");
            for n in 0..=max_n {
                let coeffs: Vec<K> = (0..=n)
                    .map(|k| {
                        let ep = families::poly_from_numbers(ctx, &e_table.values, n - k);
                        ctx.q_binomial(n as u32, k as i64)
                            * (ep.eval(&K::one())
                                - ctx.lambda().clone() * e_table.values[n - k].clone())
                            * one_minus_lambda_inv.clone()
                    })
                    .collect();
                let e_poly = families::poly_from_numbers(ctx, &e_table.values, n);
                rec.check_poly(&[("n", json!(n)), ("part", json!("reconstruct"))], || {
                    let e = BasisExpansion {
                        basis: FamilyId::frobenius(),
                        coeffs: coeffs.clone(),
                    };
                    (reconstruct(ctx, &e), e_poly.clone())
                });
                rec.check_vec(&[("n", json!(n)), ("part", json!("coefficients"))], || {
                    (expand_in_fe(ctx, &e_poly).coeffs, coeffs.clone())
                });
            }
        }
        IdentityId::Eq2_39 => {
            for r in 1..=max_r {
                let table = families::frobenius_euler_numbers_order_r(ctx, max_n, r);
                let prev = if r == 1 {
                    let mut v = vec![K::zero(); max_n + 1];
                    v[0] = K::one();
                    v
                } else {
                    families::frobenius_euler_numbers_order_r(ctx, max_n, r - 1).values
                };
                for n in 0..=max_n {
                    rec.check(&[("r", json!(r)), ("n", json!(n))], || {
                        let p = families::poly_from_numbers(ctx, &table.values, n);
                        let lhs = p.eval(&K::one())
                            - ctx.lambda().clone() * table.values[n].clone();
                        let rhs = (K::one() - ctx.lambda().clone()) * prev[n].clone();
                        (lhs, rhs)
                    });
                }
            }
        }
        IdentityId::RemarkOrderRBernoulli => {
            for r in 1..=max_r {
                let b_numbers = families::q_bernoulli_numbers_order_r(ctx, max_n, r).values;
                for n in 0..=max_n {
                    let coeffs = triple_sum_coeffs(ctx, n, r, &b_numbers);
                    let b_poly = families::poly_from_numbers(ctx, &b_numbers, n);
                    rec.check_poly(
                        &[("r", json!(r)), ("n", json!(n)), ("part", json!("reconstruct"))],
                        || {
                            let e = BasisExpansion {
                                basis: FamilyId::frobenius_r(r),
                                coeffs: coeffs.clone(),
                            };
                            (reconstruct(ctx, &e), b_poly.clone())
                        },
                    );
                    rec.check_vec(
                        &[("r", json!(r)), ("n", json!(n)), ("part", json!("coefficients"))],
                        || (expand_in_fe_order_r(ctx, &b_poly, r).coeffs, coeffs.clone()),
                    );
                }
            }
        }
        IdentityId::Orthogonality => {
            for r in 1..=max_r {
                let kernel_pow = families::frobenius_kernel(ctx, max_n).pow(ctx, r);
                let table = families::frobenius_euler_numbers_order_r(ctx, max_n, r);
                for n in 0..=max_n {
                    let h_poly = families::poly_from_numbers(ctx, &table.values, n);
                    for k in 0..=max_n {
                        rec.check(
                            &[("r", json!(r)), ("n", json!(n)), ("k", json!(k))],
                            || {
                                let v =
                                    orthogonality_pairing(ctx, &kernel_pow, &h_poly, n, k);
                                (v, delta::<K>(n, k))
                            },
                        );
                    }
                }
            }
        }
        IdentityId::Lemma2_2 => {
            let kernel_inv = families::frobenius_kernel(ctx, max_n)
                .inverse(ctx)
                .expect("kernel has constant coefficient 1");
            let table = families::frobenius_euler_numbers(ctx, max_n);
            for n in 0..=max_n {
                rec.check_poly(&[("n", json!(n)), ("part", json!("operator"))], || {
                    (
                        kernel_inv
                            .apply_operator(ctx, &Poly::x_pow(n as u32))
                            .expect("order covers degree"),
                        families::poly_from_numbers(ctx, &table.values, n),
                    )
                });
                if n >= 1 {
                    rec.check_poly(&[("n", json!(n)), ("part", json!("t-action"))], || {
                        let h_n = families::poly_from_numbers(ctx, &table.values, n);
                        let h_prev = families::poly_from_numbers(ctx, &table.values, n - 1);
                        (
                            h_n.q_derivative(ctx),
                            h_prev.scale(&ctx.q_int(n as u32)),
                        )
                    });
                }
            }
        }
        IdentityId::BernoulliAtOne => {
            let table = families::q_bernoulli_numbers(ctx, max_n);
            for n in 0..=max_n {
                rec.check(&[("n", json!(n))], || {
                    let p = families::poly_from_numbers(ctx, &table.values, n);
                    (
                        p.eval(&K::one()) - table.values[n].clone(),
                        delta::<K>(n, 1),
                    )
                });
            }
        }
        IdentityId::EulerAtOne => {
            let table = families::q_euler_numbers(ctx, max_n);
            for n in 0..=max_n {
                rec.check(&[("n", json!(n))], || {
                    let p = families::poly_from_numbers(ctx, &table.values, n);
                    (
                        p.eval(&K::one()) + table.values[n].clone(),
                        K::from_int(2) * delta::<K>(n, 0),
                    )
                });
            }
        }
        IdentityId::RoundTrip => {
            let mut rng = random::rng(seed, stream ^ 0x0707);
            for degree in 0..=max_n {
                let p: Poly<K> = random::poly(&mut rng, degree);
                rec.check_poly(&[("degree", json!(degree)), ("r", json!(1))], || {
                    (reconstruct(ctx, &expand_in_fe(ctx, &p)), p.clone())
                });
                for r in 2..=max_r {
                    let p: Poly<K> = random::poly(&mut rng, degree);
                    rec.check_poly(&[("degree", json!(degree)), ("r", json!(r))], || {
                        (
                            reconstruct(ctx, &expand_in_fe_order_r(ctx, &p, r)),
                            p.clone(),
                        )
                    });
                }
            }
        }
        IdentityId::EulerDegeneration => {
            // the driver supplies a context with lambda = -1
            let h = families::frobenius_euler_numbers(ctx, max_n);
            let e = families::q_euler_numbers(ctx, max_n);
            for n in 0..=max_n {
                rec.check_poly(&[("n", json!(n))], || {
                    (
                        families::poly_from_numbers(ctx, &h.values, n),
                        families::poly_from_numbers(ctx, &e.values, n),
                    )
                });
            }
        }
        IdentityId::ClassicalLimit => {
            check_classical_limit(cfg, rec);
        }
        IdentityId::CarlitzDual => {
            check_carlitz_dual(cfg, rec);
        }
        IdentityId::CarlitzExpand => {
            check_carlitz_expand(cfg, seed, stream, rec);
        }
        IdentityId::PerturbedFixture => {
            // corrupt H_1 and re-test the x = 1 value relation at n = 1
            let mut table = families::frobenius_euler_numbers(ctx, 1);
            table.values[1] = table.values[1].clone() + K::one();
            rec.check(&[("n", json!(1))], || {
                let p = families::poly_from_numbers(ctx, &table.values, 1);
                let lhs = p.eval(&K::one()) - ctx.lambda().clone() * table.values[1].clone();
                (lhs, K::zero())
            });
        }
    }
}

fn check_classical_limit(cfg: &SuiteConfig, rec: &mut Recorder) {
    let ctx = QContext::symbolic();
    let q1 = Rational::from_integer(1);
    let l0 = Rational::from_integer(0);
    let b_table = families::q_bernoulli_numbers(&ctx, 2);
    rec.check(&[("part", json!("bernoulli-b2"))], || {
        (
            b_table.values[2]
                .evaluate(&q1, &l0)
                .expect("cancellation removes the pole"),
            Rational::ratio(1, 6),
        )
    });
    let n_max = cfg.max_n as usize;
    let beta = carlitz::carlitz_numbers(&ctx, n_max);
    let classical = carlitz::classical_bernoulli(n_max);
    for n in 0..=n_max {
        rec.check(&[("part", json!("carlitz")), ("n", json!(n))], || {
            (
                beta[n]
                    .evaluate(&q1, &l0)
                    .expect("cancellation removes the pole"),
                classical[n].clone(),
            )
        });
    }
}

fn check_carlitz_dual(cfg: &SuiteConfig, rec: &mut Recorder) {
    let ctx = QContext::symbolic();
    for n in 0..=cfg.max_n as usize {
        rec.check_poly(&[("n", json!(n))], || {
            (
                carlitz::carlitz_poly(&ctx, n).0,
                carlitz::carlitz_poly_via_numbers(&ctx, n).0,
            )
        });
    }
}

fn check_carlitz_expand(cfg: &SuiteConfig, seed: u64, stream: u64, rec: &mut Recorder) {
    let ctx = QContext::symbolic();
    let mut rng = random::rng(seed, stream ^ 0xCA71);
    let max_deg = (cfg.max_n as usize).min(8);
    for sample in 0..5u32 {
        let degree = (sample as usize) % (max_deg + 1);
        let coeffs: Vec<RatFunc> = (0..=degree)
            .map(|_| RatFunc::from_rational(random::rational(&mut rng)))
            .collect();
        let p = carlitz::QBracketPoly::from_coeffs(coeffs);
        rec.check_poly(
            &[("sample", json!(sample)), ("degree", json!(degree))],
            || {
                let c = carlitz::expand_in_carlitz_basis(&ctx, &p);
                let rebuilt = c.iter().enumerate().fold(
                    Poly::<RatFunc>::zero(),
                    |acc, (k, ck)| acc.add(&carlitz::carlitz_poly(&ctx, k).0.scale(ck)),
                );
                (rebuilt, p.to_y_form(&ctx))
            },
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve_and_roundtrip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::from_name(id.name()).unwrap(), id);
            assert!(!id.hidden());
        }
        assert_eq!(
            IdentityId::from_name("fixture-perturbed").unwrap(),
            IdentityId::PerturbedFixture
        );
        assert_eq!(
            IdentityId::from_name("no-such-identity"),
            Err(VerifyError::UnknownIdentity("no-such-identity".into()))
        );
    }

    #[test]
    fn symbolic_smoke_suite_passes() {
        let cfg = SuiteConfig {
            max_n: 4,
            max_r: 2,
            mode: VerifyMode::Symbolic,
            trials: 1,
            seed: 7,
        };
        let reports = run_suite(&IdentityId::ALL, &cfg);
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.passed(), "failed: {} {:?} {:?}", r.identity, r.params, r.witness);
        }
    }

    #[test]
    fn numeric_smoke_suite_passes() {
        let cfg = SuiteConfig {
            max_n: 5,
            max_r: 2,
            mode: VerifyMode::Numeric,
            trials: 2,
            seed: 99,
        };
        let reports = run_suite(&IdentityId::ALL, &cfg);
        assert!(suite_passed(&reports));
        // numeric reports carry the evaluation point
        let sample = reports
            .iter()
            .find(|r| r.identity == "theorem-2.1")
            .unwrap();
        assert_eq!(sample.params["mode"], json!("numeric"));
        assert!(sample.params.get("q").is_some());
    }

    #[test]
    fn perturbed_fixture_fails_with_witness() {
        let cfg = SuiteConfig {
            max_n: 2,
            max_r: 1,
            mode: VerifyMode::Symbolic,
            trials: 1,
            seed: 1,
        };
        let reports = run_identity(IdentityId::PerturbedFixture, &cfg);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].status, ReportStatus::Fail);
        let witness = reports[0].witness.as_ref().expect("fail carries witness");
        assert!(witness.get("lhs").is_some() && witness.get("rhs").is_some());
        assert!(!suite_passed(&reports));
    }

    #[test]
    fn report_json_round_trip() {
        let cfg = SuiteConfig {
            max_n: 2,
            max_r: 1,
            mode: VerifyMode::Symbolic,
            trials: 1,
            seed: 1,
        };
        for id in [IdentityId::Theorem2_1, IdentityId::PerturbedFixture] {
            for report in run_identity(id, &cfg) {
                let line = serde_json::to_string(&report).unwrap();
                let back: VerificationReport = serde_json::from_str(&line).unwrap();
                assert_eq!(back, report);
                assert_eq!(serde_json::to_string(&back).unwrap(), line);
            }
        }
    }

    #[test]
    fn reports_are_deterministic_in_the_seed() {
        let cfg = SuiteConfig {
            max_n: 3,
            max_r: 2,
            mode: VerifyMode::Numeric,
            trials: 2,
            seed: 1234,
        };
        let a = run_identity(IdentityId::RoundTrip, &cfg);
        let b = run_identity(IdentityId::RoundTrip, &cfg);
        let strip = |v: &[VerificationReport]| {
            v.iter()
                .map(|r| (r.identity.clone(), r.params.clone(), r.status))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
    }
}
