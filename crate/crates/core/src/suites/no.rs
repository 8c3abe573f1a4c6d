//! Modular `(q,t)`-Nekrasov-Okounkov identities: hook-product sums over a
//! fixed `r`-core against multi-basic Pochhammer products. Coefficients of
//! `T` are compared either exactly (as rational functions in `q, t, u`) or
//! as power series truncated in total `q,t`-degree.

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::VerificationReport;
use crate::coeff::{Coeff, Exponent, LaurentPoly, RatFunc, SeriesCap, TruncSeries, UniSeries, Var, ZERO_EXP};
use crate::error::{Error, Result};
use crate::partition::{arm, core_quotient, enumerate_with_core, hook, is_core, leg, partitions, r_cores, Partition};

const G: usize = 3;

/// How `(a; b_1,…,b_m)_∞` is read.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PochhammerReading {
    /// `∏_{k_1,…,k_m ≥ 0} (1 − a b_1^{k_1}⋯b_m^{k_m})`.
    #[default]
    MultiIndex,
    /// `∏_j ∏_{k ≥ 0} (1 − a b_j^k)`.
    PerBase,
}

impl std::str::FromStr for PochhammerReading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "multi-index" => Ok(Self::MultiIndex),
            "per-base" => Ok(Self::PerBase),
            _ => Err(Error::InvalidInput(format!("unknown Pochhammer reading {}", s))),
        }
    }
}

/// `(a; b_1,…,b_m)_∞` for monomials `a` and `b_j`; the exponent of
/// [`Var::Grade`] is the power of `T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PochhammerSpec {
    pub argument: Exponent,
    pub bases: Vec<Exponent>,
}

fn mono(e: Exponent) -> LaurentPoly {
    LaurentPoly::mono(e)
}

fn scaled(e: &Exponent, n: i32) -> Exponent {
    e.map(|x| x * n)
}

fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    let mut out = *a;
    for (o, x) in out.iter_mut().zip(b) {
        *o += x;
    }
    out
}

fn strip_t(e: &Exponent) -> Exponent {
    let mut e = *e;
    e[G] = 0;
    e
}

/// `q^a t^b u^c T^d`.
pub fn qtu_t(a: i32, b: i32, c: i32, d: i32) -> Exponent {
    let mut e = ZERO_EXP;
    e[Var::Q.index()] = a;
    e[Var::T.index()] = b;
    e[Var::U.index()] = c;
    e[G] = d;
    e
}

impl PochhammerSpec {
    pub fn new(argument: Exponent, bases: Vec<Exponent>) -> Self {
        Self { argument, bases }
    }

    /// `log (a; b)_∞` as a series in `T` with exact coefficients, using
    /// `log(1−x) = −Σ x^n/n` and summing the geometric series in the bases.
    pub fn log(&self, reading: PochhammerReading, order: usize) -> Result<UniSeries<RatFunc>> {
        let d = self.argument[G];
        if d <= 0 {
            return Err(Error::InvalidInput(
                "Pochhammer argument must carry a positive power of T".into(),
            ));
        }
        for b in &self.bases {
            if b[G] < 0 || *b == ZERO_EXP {
                return Err(Error::InvalidInput(format!("base {:?} is not small", b)));
            }
        }
        let zero = RatFunc::zero();
        let mut out = UniSeries::new(vec![], order, &zero);
        let mut n = 1;
        while (n * d) as usize <= order {
            let lead = RatFunc::mono(strip_t(&scaled(&self.argument, n)))
                .scale(&num_rational::BigRational::new((-1).into(), n.into()));
            let groups: Vec<Vec<&Exponent>> = match reading {
                PochhammerReading::MultiIndex => vec![self.bases.iter().collect()],
                PochhammerReading::PerBase => self.bases.iter().map(|b| vec![b]).collect(),
            };
            for group in groups {
                let flat: Vec<LaurentPoly> = group.iter().filter(|b| b[G] == 0).map(|b| mono(scaled(b, n))).collect();
                let c = RatFunc::over_one_minus(lead.numerator().clone(), &flat)?;
                // geometric series in the bases that carry T
                let mut s = UniSeries::monomial(c, (n * d) as usize, order);
                for b in group.iter().filter(|b| b[G] > 0) {
                    let step = (n * b[G]) as usize;
                    let m = RatFunc::mono(strip_t(&scaled(b, n)));
                    let mut coeffs = vec![RatFunc::zero(); order + 1];
                    let mut k = 0;
                    let mut pw = RatFunc::one();
                    while k * step <= order {
                        coeffs[k * step] = pw.clone();
                        pw = pw.mul(&m);
                        k += 1;
                    }
                    s = s.mul(&UniSeries::new(coeffs, order, &zero));
                }
                out = out.add(&s);
            }
            n += 1;
        }
        Ok(out)
    }

    /// Every factor `1 − x` of the product that survives `cap`, as exponents.
    fn factors(&self, reading: PochhammerReading, cap: SeriesCap) -> Result<Vec<Exponent>> {
        for b in &self.bases {
            if !grows(&cap, b) {
                return Err(Error::NotExpandable(format!("base {:?} is not small under the cap", b)));
            }
        }
        let mut out = Vec::new();
        match reading {
            PochhammerReading::MultiIndex => {
                let mut stack = vec![(self.argument, 0usize)];
                while let Some((e, j)) = stack.pop() {
                    if !cap.admits(&e) {
                        continue;
                    }
                    if j == self.bases.len() {
                        out.push(e);
                        continue;
                    }
                    // k_j = 0, 1, 2, … while admitted
                    let mut cur = e;
                    while cap.admits(&cur) {
                        stack.push((cur, j + 1));
                        cur = add_exp(&cur, &self.bases[j]);
                    }
                }
            }
            PochhammerReading::PerBase => {
                for b in &self.bases {
                    let mut cur = self.argument;
                    while cap.admits(&cur) {
                        out.push(cur);
                        cur = add_exp(&cur, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The truncated product itself.
    pub fn series(&self, reading: PochhammerReading, cap: SeriesCap) -> Result<TruncSeries> {
        let one = num_rational::BigRational::from_integer(1.into());
        let mut s = TruncSeries::one(cap);
        for e in self.factors(reading, cap)? {
            s = s.mul_one_minus(&e, &one);
        }
        Ok(s)
    }

    /// `1 / (a; b)_∞`, truncated.
    pub fn series_inverse(&self, reading: PochhammerReading, cap: SeriesCap) -> Result<TruncSeries> {
        let one = num_rational::BigRational::from_integer(1.into());
        let mut s = TruncSeries::one(cap);
        for e in self.factors(reading, cap)? {
            s = s.div_one_minus(&e, &one)?;
        }
        Ok(s)
    }
}

fn grows(cap: &SeriesCap, e: &Exponent) -> bool {
    let qt = e[Var::Q.index()] + e[Var::T.index()];
    e.iter().enumerate().all(|(i, x)| i == Var::U.index() || *x >= 0)
        && ((cap.qt.is_some() && qt > 0)
            || (cap.big_t.is_some() && e[G] > 0)
            || (cap.p.is_some() && e[Var::P.index()] > 0))
}

fn one_minus(e: Exponent) -> LaurentPoly {
    LaurentPoly::one().sub(&mono(e))
}

/// `(1−uq^{a+1}t^l)(1−u⁻¹q^a t^{l+1}) / ((1−q^{a+1}t^l)(1−q^a t^{l+1}))`.
pub fn box_ratio(a: i32, l: i32) -> Result<RatFunc> {
    let num = one_minus(qtu_t(a + 1, l, 1, 0)).mul(&one_minus(qtu_t(a, l + 1, -1, 0)));
    let den = one_minus(qtu_t(a + 1, l, 0, 0)).mul(&one_minus(qtu_t(a, l + 1, 0, 0)));
    RatFunc::new(num, &den)
}

/// Product of [`box_ratio`] over the boxes of `λ` with hook divisible by `r`.
pub fn hook_ratio(lambda: &Partition, r: u32) -> Result<RatFunc> {
    let mut out = RatFunc::one();
    for c in lambda.cells() {
        if hook(lambda, c) % r as i64 == 0 {
            out = out.mul(&box_ratio(arm(lambda, c) as i32, leg(lambda, c) as i32)?);
        }
    }
    Ok(out)
}

fn check_core(alpha: &Partition, r: u32) -> Result<()> {
    if !is_core(alpha, r)? {
        return Err(Error::InvalidInput(format!("{} is not a {}-core", alpha, r)));
    }
    Ok(())
}

/// `Σ_{core λ = α} T^{|quot λ|} hook_ratio(λ)`, exact coefficients up to `T^order`.
pub fn no_modular_sum_side_exact(alpha: &Partition, r: u32, order: usize) -> Result<UniSeries<RatFunc>> {
    check_core(alpha, r)?;
    let coeffs = (0..=order as u32)
        .map(|n| {
            enumerate_with_core(alpha, r, n)?
                .iter()
                .try_fold(RatFunc::zero(), |acc, l| Ok(acc.add(&hook_ratio(l, r)?)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniSeries::new(coeffs, order, &RatFunc::zero()))
}

/// The same sum as a power series, with the denominators expanded for
/// small `q, t`. `cap.big_t` bounds the power of `T`.
pub fn no_modular_sum_side(alpha: &Partition, r: u32, cap: SeriesCap) -> Result<TruncSeries> {
    check_core(alpha, r)?;
    let order = cap
        .big_t
        .ok_or_else(|| Error::InvalidInput("the T cap must be set".into()))?;
    let mut out = TruncSeries::zero(cap);
    for n in 0..=order {
        for l in enumerate_with_core(alpha, r, n)? {
            let x = hook_ratio(&l, r)?.mul_poly(&mono(qtu_t(0, 0, 0, n as i32)));
            out = out.add(&TruncSeries::from_ratfunc(cap, &x)?);
        }
    }
    Ok(out)
}

/// The Pochhammer symbols of the product side: the `r` copies of `(T;T)_∞`
/// in the denominator, then numerator and denominator pairs for each `i`.
fn product_symbols(r: u32) -> (Vec<PochhammerSpec>, Vec<PochhammerSpec>) {
    let r = r as i32;
    let bases = vec![qtu_t(r, 0, 0, 0), qtu_t(0, r, 0, 0), qtu_t(0, 0, 0, 1)];
    let tt = PochhammerSpec::new(qtu_t(0, 0, 0, 1), vec![qtu_t(0, 0, 0, 1)]);
    let mut num = Vec::new();
    let mut den = vec![tt; r as usize];
    for i in 1..=r {
        num.push(PochhammerSpec::new(qtu_t(i, r - i, 1, 1), bases.clone()));
        num.push(PochhammerSpec::new(qtu_t(r - i, i, -1, 1), bases.clone()));
        den.push(PochhammerSpec::new(qtu_t(i, r - i, 0, 1), bases.clone()));
        den.push(PochhammerSpec::new(qtu_t(r - i, i, 0, 1), bases.clone()));
    }
    (num, den)
}

/// `exp(Σ num log − Σ den log)`, exactly in `T`.
fn ratio_exact(
    num: &[PochhammerSpec],
    den: &[PochhammerSpec],
    reading: PochhammerReading,
    order: usize,
) -> Result<UniSeries<RatFunc>> {
    let mut log = UniSeries::new(vec![], order, &RatFunc::zero());
    for p in num {
        log = log.add(&p.log(reading, order)?);
    }
    for p in den {
        log = log.sub(&p.log(reading, order)?);
    }
    log.exp()
}

fn ratio_series(
    num: &[PochhammerSpec],
    den: &[PochhammerSpec],
    reading: PochhammerReading,
    cap: SeriesCap,
) -> Result<TruncSeries> {
    let mut s = TruncSeries::one(cap);
    for p in num {
        s = s.mul(&p.series(reading, cap)?);
    }
    for p in den {
        s = s.mul(&p.series_inverse(reading, cap)?);
    }
    Ok(s)
}

/// `(1/(T;T)^r) ∏_i (uq^it^{r−i}T, u⁻¹q^{r−i}t^iT; q^r,t^r,T)/(q^it^{r−i}T, q^{r−i}t^iT; q^r,t^r,T)`
/// by log-exp, exact coefficients up to `T^order`.
pub fn no_modular_product_side_exact(r: u32, order: usize, reading: PochhammerReading) -> Result<UniSeries<RatFunc>> {
    let (num, den) = product_symbols(r);
    ratio_exact(&num, &den, reading, order)
}

/// The product side as a truncated product of its linear factors.
pub fn no_modular_product_side(r: u32, cap: SeriesCap, reading: PochhammerReading) -> Result<TruncSeries> {
    let (num, den) = product_symbols(r);
    ratio_series(&num, &den, reading, cap)
}

/// The classical product side as displayed: `(uqT, u⁻¹tT; q,t,T)/(T, tT; q,t,T)`.
pub fn classical_product_printed(order: usize, reading: PochhammerReading) -> Result<UniSeries<RatFunc>> {
    let b = vec![qtu_t(1, 0, 0, 0), qtu_t(0, 1, 0, 0), qtu_t(0, 0, 0, 1)];
    let num = [
        PochhammerSpec::new(qtu_t(1, 0, 1, 1), b.clone()),
        PochhammerSpec::new(qtu_t(0, 1, -1, 1), b.clone()),
    ];
    let den = [
        PochhammerSpec::new(qtu_t(0, 0, 0, 1), b.clone()),
        PochhammerSpec::new(qtu_t(0, 1, 0, 1), b),
    ];
    ratio_exact(&num, &den, reading, order)
}

/// `Σ_α T^{|α|} = (T^r;T^r)^r_∞ / (T;T)_∞`.
pub fn core_generating_function(r: u32, order: usize) -> Result<UniSeries<RatFunc>> {
    let tr = PochhammerSpec::new(qtu_t(0, 0, 0, r as i32), vec![qtu_t(0, 0, 0, r as i32)]);
    let t = PochhammerSpec::new(qtu_t(0, 0, 0, 1), vec![qtu_t(0, 0, 0, 1)]);
    ratio_exact(&vec![tr; r as usize], &[t], PochhammerReading::MultiIndex, order)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoMode {
    /// Exact rational coefficients of each power of `T`.
    #[default]
    Exact,
    /// Power series truncated at total `q,t`-degree `qt_cap`.
    Series,
    Both,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NoConfig {
    pub r: u32,
    pub cores: Vec<Partition>,
    pub order_t: u32,
    pub qt_cap: u32,
    pub mode: NoMode,
    pub reading: PochhammerReading,
}

impl NoConfig {
    pub fn new(r: u32, cores: Vec<Partition>, order_t: u32) -> Self {
        Self {
            r,
            cores,
            order_t,
            qt_cap: 10,
            mode: NoMode::Exact,
            reading: PochhammerReading::MultiIndex,
        }
    }

    fn params(&self) -> serde_json::Value {
        json!({
            "r": self.r,
            "cores": self.cores.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "order_t": self.order_t,
            "qt_cap": self.qt_cap,
            "mode": self.mode,
            "reading": self.reading,
        })
    }
}

fn compare_exact(report: &mut VerificationReport, key: &str, lhs: &UniSeries<RatFunc>, rhs: &UniSeries<RatFunc>) {
    for n in 0..=lhs.order() {
        let (a, b) = (lhs.coeff(n), rhs.coeff(n));
        report.check(
            format!("{} T^{}", key, n),
            a.same(b),
            || a.canonical(),
            || b.canonical(),
        );
    }
}

fn compare_series(report: &mut VerificationReport, key: &str, lhs: &TruncSeries, rhs: &TruncSeries, order: u32) {
    for n in 0..=order as i32 {
        let (a, b) = (lhs.coefficient_in(Var::Grade, n), rhs.coefficient_in(Var::Grade, n));
        report.check(format!("{} T^{}", key, n), a == b, || a.to_string(), || b.to_string());
    }
}

/// Sum side against product side for every core, plus agreement of the sum
/// sides across cores.
pub fn no_modular_verify(cfg: &NoConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("no-modular", cfg.params());
    let order = cfg.order_t as usize;
    let exact = matches!(cfg.mode, NoMode::Exact | NoMode::Both);
    let series = matches!(cfg.mode, NoMode::Series | NoMode::Both);
    let cap = SeriesCap::qt(cfg.qt_cap).with_big_t(cfg.order_t);
    let prod_exact = if exact {
        Some(no_modular_product_side_exact(cfg.r, order, cfg.reading)?)
    } else {
        None
    };
    let prod_series = if series {
        Some(no_modular_product_side(cfg.r, cap, cfg.reading)?)
    } else {
        None
    };
    let mut sums: Vec<(Partition, UniSeries<RatFunc>)> = Vec::new();
    for core in &cfg.cores {
        report.attempt(format!("core {}", core), |report| {
            if let Some(p) = &prod_exact {
                let s = no_modular_sum_side_exact(core, cfg.r, order)?;
                compare_exact(report, &format!("core {} exact", core), &s, p);
                sums.push((core.clone(), s));
            }
            if let Some(p) = &prod_series {
                let s = no_modular_sum_side(core, cfg.r, cap)?;
                compare_series(report, &format!("core {} series", core), &s, p, cfg.order_t);
            }
            Ok(())
        });
    }
    if let Some((first, s0)) = sums.first() {
        for (core, s) in &sums[1..] {
            compare_exact(&mut report, &format!("sum side {} vs {}", first, core), s0, s);
        }
    }
    Ok(report.finish())
}

/// The `r = 1` case over all partitions: the product side of the theorem
/// must match. The product exactly as displayed in the classical statement
/// is compared too and its outcome is recorded as a note.
pub fn classical_check(order_t: u32, reading: PochhammerReading) -> Result<VerificationReport> {
    let order = order_t as usize;
    let mut report = VerificationReport::new("no-classical", json!({ "order_t": order_t, "reading": reading }));
    let sum = no_modular_sum_side_exact(&Partition::empty(), 1, order)?;
    compare_exact(
        &mut report,
        "sum vs 1/(T;T)·(uqT,u⁻¹tT)/(qT,tT)",
        &sum,
        &no_modular_product_side_exact(1, order, reading)?,
    );
    let printed = classical_product_printed(order, reading)?;
    match sum.first_difference(&printed) {
        None => report.note("the displayed form (uqT,u⁻¹tT)/(T,tT) also matches".to_string()),
        Some(n) => report.note(format!(
            "the displayed form (uqT,u⁻¹tT)/(T,tT) differs from the sum at T^{}: {} vs {}",
            n,
            sum.coeff(n).canonical(),
            printed.coeff(n).canonical()
        )),
    }
    Ok(report.finish())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeakConfig {
    pub r: u32,
    /// Highest power of `T`.
    pub t_cap: u32,
    /// Highest power of `S`.
    pub s_cap: u32,
    pub reading: PochhammerReading,
}

impl WeakConfig {
    pub fn new(r: u32, t_cap: u32, s_cap: u32) -> Self {
        Self {
            r,
            t_cap,
            s_cap,
            reading: PochhammerReading::MultiIndex,
        }
    }
}

/// `f(X) ↦ f(ST^r)` keeping `S^k` for `k ≤ s_cap`; `S` is [`Var::P`].
fn stretch(f: &UniSeries<RatFunc>, r: u32, order: usize, s_cap: u32) -> UniSeries<RatFunc> {
    let mut coeffs = vec![RatFunc::zero(); order + 1];
    for k in 0..=f.order().min(s_cap as usize) {
        let d = k * r as usize;
        if d <= order {
            let mut e = ZERO_EXP;
            e[Var::P.index()] = k as i32;
            coeffs[d] = f.coeff(k).mul(&RatFunc::mono(e));
        }
    }
    UniSeries::new(coeffs, order, &RatFunc::zero())
}

/// The sum over all partitions weighted by `S^{|quot λ|} T^{|λ|}`, three ways:
/// directly, assembled core by core from the modular sum sides, and as the
/// core generating function times the product side at `T ↦ ST^r`. The core
/// generating function is also checked against a count of cores.
pub fn no_weak_form_verify(cfg: &WeakConfig) -> Result<VerificationReport> {
    let (r, order) = (cfg.r, cfg.t_cap as usize);
    let mut report = VerificationReport::new(
        "no-weak",
        json!({ "r": r, "t_cap": cfg.t_cap, "s_cap": cfg.s_cap, "reading": cfg.reading }),
    );
    let zero = RatFunc::zero();
    let s_pow = |k: u32| {
        let mut e = ZERO_EXP;
        e[Var::P.index()] = k as i32;
        RatFunc::mono(e)
    };

    let mut direct = vec![RatFunc::zero(); order + 1];
    for (n, slot) in direct.iter_mut().enumerate() {
        for l in partitions(n as u32) {
            let k = core_quotient(&l, r)?.quotient.size();
            if k <= cfg.s_cap {
                *slot = slot.add(&hook_ratio(&l, r)?.mul(&s_pow(k)));
            }
        }
    }
    let direct = UniSeries::new(direct, order, &zero);

    let mut assembled = UniSeries::new(vec![], order, &zero);
    let per_core = order / r as usize;
    let cores = r_cores(r, cfg.t_cap)?;
    for alpha in &cores {
        let s = stretch(&no_modular_sum_side_exact(alpha, r, per_core)?, r, order, cfg.s_cap);
        assembled = assembled.add(&s.mul(&UniSeries::monomial(RatFunc::one(), alpha.size() as usize, order)));
    }
    compare_exact(&mut report, "direct vs per-core assembly", &direct, &assembled);

    let gf = core_generating_function(r, order)?;
    for n in 0..=order {
        let count = cores.iter().filter(|a| a.size() as usize == n).count() as i64;
        let c = gf.coeff(n);
        report.check(
            format!("core count T^{}", n),
            c.same(&RatFunc::from_int(count)),
            || c.canonical(),
            || count.to_string(),
        );
    }
    let prod = stretch(
        &no_modular_product_side_exact(r, per_core, cfg.reading)?,
        r,
        order,
        cfg.s_cap,
    );
    compare_exact(&mut report, "direct vs product", &direct, &gf.mul(&prod));
    Ok(report.finish())
}
