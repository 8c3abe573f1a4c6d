//! Suites built on the wreath Macdonald basis: Ext pairing, norms and
//! orthogonality, Pieri rules, the Tesler identity and the delta property.

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{eval_points, SuiteMode, VerificationReport};
use crate::charsum::{color_part_poly, d_sum};
use crate::coeff::{Backend, Coeff, ExactBackend, LaurentPoly, PointBackend, RatFunc, Var, ZERO_EXP};
use crate::error::Result;
use crate::partition::{arm, core_quotient, leg, multipartitions, Partition};
use crate::symfunc::{schur_basis, vector_evaluate, wreath_pairing};
use crate::wreath::{
    delta_series, expected_ext, ext_pairing, pieri_mult, pieri_mult_expected, pieri_skew, pieri_skew_expected,
    solve_h_exact, v_operator, Normalization, PieriCheck, SolveMode, Wreath,
};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WreathSuiteConfig {
    pub r: u32,
    pub cores: Vec<Partition>,
    pub max_quot: u32,
    pub mode: SuiteMode,
    /// In `Auto` mode, cases whose largest degree exceeds this use points.
    pub exact_max_degree: u32,
    pub points: usize,
    pub seed: u64,
}

impl WreathSuiteConfig {
    pub fn new(r: u32, cores: Vec<Partition>, max_quot: u32) -> Self {
        Self {
            r,
            cores,
            max_quot,
            mode: SuiteMode::Auto,
            exact_max_degree: if r == 1 { 4 } else { 1 },
            points: 3,
            seed: 1,
        }
    }

    fn params(&self) -> serde_json::Value {
        json!({
            "r": self.r,
            "cores": self.cores.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "max_quot": self.max_quot,
            "mode": self.mode,
            "exact_max_degree": self.exact_max_degree,
            "points": self.points,
            "seed": self.seed,
        })
    }

    fn use_exact(&self, degree: u32) -> bool {
        match self.mode {
            SuiteMode::Exact | SuiteMode::Series => true,
            SuiteMode::Points => false,
            SuiteMode::Auto => degree <= self.exact_max_degree,
        }
    }
}

/// Polynomials a point must not annihilate: `1 − q^i t^j u^k` for small
/// exponents, which covers every denominator met in these suites.
fn forbidden() -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for i in -8..=8 {
        for j in -8..=8 {
            for k in -1..=1 {
                if i == 0 && j == 0 && k == 0 {
                    continue;
                }
                let mut e = ZERO_EXP;
                e[Var::Q.index()] = i;
                e[Var::T.index()] = j;
                e[Var::U.index()] = k;
                out.push(LaurentPoly::one().sub(&LaurentPoly::mono(e)));
            }
        }
    }
    out
}

/// Exact context plus point contexts for one core.
struct Contexts {
    exact: Wreath<ExactBackend>,
    points: Vec<Wreath<PointBackend>>,
}

impl Contexts {
    fn new(cfg: &WreathSuiteConfig, core: &Partition) -> Result<Self> {
        let exact = Wreath::new(
            ExactBackend::new(),
            cfg.r,
            core.clone(),
            Normalization::Color0,
            SolveMode::Exact,
        )?;
        let needs_points = cfg.mode != SuiteMode::Exact && cfg.mode != SuiteMode::Series;
        let points = if needs_points {
            eval_points(cfg.seed, cfg.points, &forbidden())?
                .into_iter()
                .map(|p| {
                    Ok(Wreath::new(
                        PointBackend::new(p),
                        cfg.r,
                        core.clone(),
                        Normalization::Color0,
                        SolveMode::Direct,
                    )?
                    .with_solved_expansions(true))
                })
                .collect::<Result<_>>()?
        } else {
            Vec::new()
        };
        Ok(Self { exact, points })
    }
}

/// Runs `$body` against the exact context or against each point context,
/// expanding it once per backend type; an error becomes an error case.
macro_rules! dispatch {
    ($cfg:expr, $ctx:expr, $degree:expr, $report:expr, $key:expr, |$w:ident, $tag:ident| $body:block) => {{
        if $cfg.use_exact($degree) {
            let $w = &$ctx.exact;
            let $tag = "exact".to_string();
            let full = format!("{} [{}]", $key, $tag);
            let res: Result<()> = (|| {
                $body
                Ok(())
            })();
            if let Err(e) = res {
                $report.error(full, &e);
            }
        } else {
            for (i, $w) in $ctx.points.iter().enumerate() {
                let $tag = format!("pt{}", i);
                let full = format!("{} [{}]", $key, $tag);
                let res: Result<()> = (|| {
                    $body
                    Ok(())
                })();
                if let Err(e) = res {
                    $report.error(full, &e);
                }
            }
        }
    }};
}

fn quot(lambda: &Partition, r: u32) -> Result<u32> {
    Ok(core_quotient(lambda, r)?.quotient.size())
}

fn same_core_upto(w: &Wreath<ExactBackend>, max_quot: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for n in 0..=max_quot {
        out.extend(w.partitions(n)?);
    }
    Ok(out)
}

/// `⟨H_μ†, W(u) H_λ⟩' = u^{−|quot μ|} N_{λ,μ}(u)` for all same-core pairs.
pub fn ext_pairing_suite(cfg: &WreathSuiteConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("ext-pairing", cfg.params());
    let u = RatFunc::var(Var::U);
    for core in &cfg.cores {
        let ctx = Contexts::new(cfg, core)?;
        let lams = same_core_upto(&ctx.exact, cfg.max_quot)?;
        for l in &lams {
            for m in &lams {
                let degree = quot(l, cfg.r)?.max(quot(m, cfg.r)?);
                let key = format!("core {} λ={} μ={}", core, l, m);
                let mut cases = Vec::new();
                dispatch!(cfg, ctx, degree, report, key, |w, tag| {
                    let v = ext_pairing(w, l, m, &u)?;
                    let e = w.backend().embed(&expected_ext(l, m, cfg.r, &u)?)?;
                    cases.push((tag, v.same(&e), v.canonical(), e.canonical()));
                });
                for (tag, ok, a, b) in cases {
                    report.check(format!("{} [{}]", key, tag), ok, || a, || b);
                }
            }
        }
    }
    Ok(report.finish())
}

/// `∏_{h ≡ 0 mod r} (1 − q^{−a} t^{l+1})(1 − q^{a+1} t^{−l})`.
pub fn hook_norm(lambda: &Partition, r: u32) -> RatFunc {
    let one = LaurentPoly::one();
    let mut p = LaurentPoly::one();
    for c in lambda.cells() {
        let (a, l) = (arm(lambda, c) as i32, leg(lambda, c) as i32);
        if (a + l + 1) % r as i32 == 0 {
            p = p
                .mul(&one.sub(&LaurentPoly::qt(-a, l + 1)))
                .mul(&one.sub(&LaurentPoly::qt(a + 1, -l)));
        }
    }
    RatFunc::from_poly(p)
}

/// Norms against the hook formula, and orthogonality of distinct pairs of
/// equal degree.
pub fn norm_suite(cfg: &WreathSuiteConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("norm", cfg.params());
    for core in &cfg.cores {
        let ctx = Contexts::new(cfg, core)?;
        for n in 0..=cfg.max_quot {
            let lams = ctx.exact.partitions(n)?;
            for l in &lams {
                for m in &lams {
                    let key = format!("core {} <H_{}†, H_{}>", core, m, l);
                    let mut cases = Vec::new();
                    dispatch!(cfg, ctx, n, report, key, |w, tag| {
                        let v = wreath_pairing(&w.dagger(m, n)?, &w.h(l, n)?, w.backend())?;
                        let e = if l == m {
                            w.backend().embed(&hook_norm(l, cfg.r))?
                        } else {
                            w.backend().zero()
                        };
                        cases.push((tag, v.same(&e), v.canonical(), e.canonical()));
                    });
                    for (tag, ok, a, b) in cases {
                        report.check(format!("{} [{}]", key, tag), ok, || a, || b);
                    }
                }
            }
        }
    }
    Ok(report.finish())
}

/// `r = 1` sanity: the two-box examples, then orthogonality and norms up to
/// `max_quot`.
pub fn r1_sanity_suite(max_quot: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("r1-sanity", json!({"max_quot": max_quot}));
    let q = RatFunc::var(Var::Q);
    let t = RatFunc::var(Var::T);
    for (lam, second) in [(Partition::from_slice(&[2]), q), (Partition::from_slice(&[1, 1]), t)] {
        report.attempt(format!("H_{}", lam), |report| {
            let h = solve_h_exact(&lam, 1, Normalization::Color0)?;
            let want = [RatFunc::one(), second.clone()];
            let ok = multipartitions(1, 2)[0].0[0] == Partition::from_slice(&[2])
                && h.iter().zip(&want).all(|(a, b)| a.same(b));
            report.check(
                format!("H_{} = s_2 + ({}) s_11", lam, second),
                ok,
                || format!("{:?}", h),
                || format!("{:?}", want),
            );
            Ok(())
        });
    }
    let mut cfg = WreathSuiteConfig::new(1, vec![Partition::empty()], max_quot);
    cfg.mode = SuiteMode::Exact;
    report.merge(norm_suite(&cfg)?);
    Ok(report.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieriKind {
    Skew,
    Mult,
}

/// Pieri expansions at step `n` against the Nekrasov ratios and the
/// `⊂_n` support.
pub fn pieri_suite(cfg: &WreathSuiteConfig, kind: PieriKind, n: u32) -> Result<VerificationReport> {
    let name = match kind {
        PieriKind::Skew => "pieri-skew",
        PieriKind::Mult => "pieri-mult",
    };
    let mut report = VerificationReport::new(name, cfg.params());
    for core in &cfg.cores {
        let ctx = Contexts::new(cfg, core)?;
        for l in same_core_upto(&ctx.exact, cfg.max_quot)? {
            let k = quot(&l, cfg.r)?;
            let degree = match kind {
                PieriKind::Skew => k,
                PieriKind::Mult => k + n,
            };
            let expected = match kind {
                PieriKind::Skew => pieri_skew_expected(core, &l, cfg.r, n)?,
                PieriKind::Mult => pieri_mult_expected(core, &l, cfg.r, n)?,
            };
            let key = format!("core {} λ={} n={}", core, l, n);
            let mut cases = Vec::new();
            dispatch!(cfg, ctx, degree, report, key, |w, tag| {
                let got = match kind {
                    PieriKind::Skew => pieri_skew(w, &l, n)?,
                    PieriKind::Mult => pieri_mult(w, &l, n)?,
                };
                let c = PieriCheck::compare(w.backend(), &l, n, &got, &expected)?;
                cases.push((tag, c));
            });
            for (tag, c) in cases {
                let ok = c.ok();
                report.flag(format!("{} [{}]", key, tag), ok, || {
                    c.mismatch.clone().unwrap_or_default()
                });
            }
        }
    }
    Ok(report.finish())
}

/// `V_α H_λ = 𝔼_λ` and `V*_α H_λ† = 𝔼*_λ`, truncated at `|quot λ| + 2`.
pub fn tesler_suite(cfg: &WreathSuiteConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("tesler", cfg.params());
    for core in &cfg.cores {
        let ctx = Contexts::new(cfg, core)?;
        for l in same_core_upto(&ctx.exact, cfg.max_quot)? {
            let cap = quot(&l, cfg.r)? + 2;
            for starred in [false, true] {
                let key = format!("core {} λ={} {} cap {}", core, l, if starred { "V*" } else { "V" }, cap);
                let mut cases = Vec::new();
                dispatch!(cfg, ctx, cap, report, key, |w, tag| {
                    let f = if starred { w.dagger(&l, cap)? } else { w.h(&l, cap)? };
                    let v = v_operator(w, &f, starred, cap)?;
                    let e = delta_series(&l, cfg.r, cap, starred, w.backend())?;
                    let diff = v.first_difference(&e);
                    cases.push((tag, diff));
                });
                for (tag, diff) in cases {
                    report.flag(format!("{} [{}]", key, tag), diff.is_none(), || {
                        let (k, a, b) = diff.clone().unwrap();
                        format!("at p_{}: {} vs {}", k, a, b)
                    });
                }
            }
        }
    }
    Ok(report.finish())
}

/// `⟨f, 𝔼_λ⟩' = f[ιD_λ^•]` and `⟨f, 𝔼*_λ⟩' = f[−qt ι D̄_λ^•]` for every
/// multi-Schur `f` of degree at most `min(3, |quot λ| + 2)`.
pub fn delta_suite(cfg: &WreathSuiteConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("delta", cfg.params());
    let r = cfg.r;
    for core in &cfg.cores {
        let ctx = Contexts::new(cfg, core)?;
        for l in same_core_upto(&ctx.exact, cfg.max_quot)? {
            let cap = (quot(&l, r)? + 2).min(3);
            let d = d_sum(&l, r)?;
            let iota = |x: &LaurentPoly| -> Vec<RatFunc> {
                (0..r)
                    .map(|i| RatFunc::from_poly(color_part_poly(x, r, (r - i) % r)))
                    .collect()
            };
            let plain = iota(d.poly());
            let starred_data = iota(&d.bar().poly().mul(&LaurentPoly::qt(1, 1)).neg());
            for starred in [false, true] {
                let data = if starred { &starred_data } else { &plain };
                let key = format!("core {} λ={} {}", core, l, if starred { "𝔼*" } else { "𝔼" });
                let mut cases = Vec::new();
                // the delta series needs no H; exact arithmetic only gets slow at cap 3
                let degree = if cap <= 2 { 0 } else { cap };
                dispatch!(cfg, ctx, degree, report, key, |w, tag| {
                    let b = w.backend();
                    let e = delta_series(&l, r, cap, starred, b)?;
                    let mut bad = None;
                    for deg in 0..=cap {
                        for (nu, s) in schur_basis(r, deg, cap, b)? {
                            let lhs = wreath_pairing(&s, &e, b)?;
                            let rhs = vector_evaluate(&s, data, b)?;
                            if !lhs.same(&rhs) && bad.is_none() {
                                bad = Some(format!("s_{}: {} vs {}", nu, lhs.canonical(), rhs.canonical()));
                            }
                        }
                    }
                    cases.push((tag, bad));
                });
                for (tag, bad) in cases {
                    report.flag(format!("{} [{}]", key, tag), bad.is_none(), || bad.clone().unwrap());
                }
            }
        }
    }
    Ok(report.finish())
}
