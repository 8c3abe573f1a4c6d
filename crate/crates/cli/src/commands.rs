use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use serde_json::{json, Value};

use wreath_core::charsum::nekrasov_factor;
use wreath_core::coeff::{Coeff, SeriesCap, Var};
use wreath_core::partition::{core_quotient, hook, is_core, to_maya, Cell, Partition};
use wreath_core::suites::{
    classical_check, delta_suite, elliptic_core_independence, ext_pairing_suite, no_modular_product_side,
    no_modular_product_side_exact, no_modular_sum_side, no_modular_sum_side_exact, no_modular_verify,
    no_weak_form_verify, norm_suite, pieri_suite, tesler_suite, trace_check, EllipticConfig, NoConfig, NoMode,
    PieriKind, PochhammerReading, SuiteMode, TraceConfig, VerificationReport, WeakConfig, WreathSuiteConfig,
};
use wreath_core::wreath::{Normalization, WreathBasisTable, TABLE_VERSION};

use crate::config::CliConfig;

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit code 2.
    Usage(String),
    /// A computation or I/O failure: exit code 1.
    Runtime(String),
}

type CmdResult = Result<ExitCode, CliError>;

fn runtime(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Partition::parse(s).map_err(|e| CliError::Usage(format!("partition {:?}: {}", s, e)))
}

fn parse_core(s: &str, r: u32) -> Result<Partition, CliError> {
    let p = parse_partition(s)?;
    match is_core(&p, r) {
        Ok(true) => Ok(p),
        Ok(false) => Err(CliError::Usage(format!("{} is not a {}-core", p, r))),
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

fn check_r(r: u32) -> Result<(), CliError> {
    if r == 0 {
        return Err(CliError::Usage("r must be at least 1".into()));
    }
    Ok(())
}

fn emit(value: &Value, out: Option<&Path>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(runtime)? + "\n";
    match out {
        Some(p) => fs::write(p, text).map_err(|e| runtime(format!("{}: {}", p.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

/// Cell-by-cell values laid out as the rows of `λ`.
fn by_rows<T>(lambda: &Partition, f: impl Fn(Cell) -> T) -> Vec<Vec<T>> {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(b, &len)| (0..len).map(|a| f(Cell::new(a, b as u32))).collect())
        .collect()
}

pub fn partition_info(lambda: &str, r: u32) -> CmdResult {
    check_r(r)?;
    let lambda = parse_partition(lambda)?;
    let cq = core_quotient(&lambda, r).map_err(runtime)?;
    let maya = to_maya(&lambda);
    let mut color_counts = vec![0u32; r as usize];
    for c in lambda.cells() {
        color_counts[c.color(r) as usize] += 1;
    }
    let out = json!({
        "partition": lambda,
        "r": r,
        "size": lambda.size(),
        "length": lambda.len(),
        "transpose": lambda.transpose(),
        "hooks": by_rows(&lambda, |c| hook(&lambda, c)),
        "colors": by_rows(&lambda, |c| c.color(r)),
        "color_counts": color_counts,
        "maya": {
            "charge": maya.charge(),
            "black_nonneg": maya.black_nonneg(),
            "white_neg": maya.white_neg(),
        },
        "core": cq.core,
        "quotient": cq.quotient,
        "quotient_size": cq.quotient_size(),
        "charges": cq.charges,
    });
    emit(&out, None)?;
    Ok(ExitCode::SUCCESS)
}

pub fn hpoly(cfg: &CliConfig, r: u32, core: &str, n: u32, powersum: bool, out: Option<&Path>) -> CmdResult {
    check_r(r)?;
    let core = parse_core(core, r)?;
    let (table, hit) = WreathBasisTable::load_or_compute(cfg.cache_dir.as_deref(), r, &core, n, Normalization::Color0)
        .map_err(runtime)?;
    eprintln!("{}", if hit { "cache hit" } else { "computed" });
    let entries: Vec<Value> = if powersum {
        table
            .powersum()
            .map_err(runtime)?
            .into_iter()
            .map(|(lambda, f)| {
                let terms: Vec<Value> = f
                    .terms()
                    .iter()
                    .map(|(rho, c)| json!({ "index": rho.to_string(), "value": c.canonical() }))
                    .collect();
                json!({ "lambda": lambda, "terms": terms })
            })
            .collect()
    } else {
        table
            .entries
            .iter()
            .map(|e| {
                let terms: Vec<Value> = table
                    .basis
                    .iter()
                    .zip(&e.schur)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(nu, c)| json!({ "index": nu.to_string(), "value": c.canonical() }))
                    .collect();
                json!({ "lambda": e.lambda, "terms": terms })
            })
            .collect()
    };
    let value = json!({
        "version": TABLE_VERSION,
        "r": r,
        "core": core,
        "quot_size": n,
        "normalization": table.normalization,
        "basis": if powersum { "powersum" } else { "schur" },
        "entries": entries,
    });
    emit(&value, out)?;
    Ok(ExitCode::SUCCESS)
}

pub fn nekrasov(r: u32, lam: &str, mu: &str, csv_out: bool) -> CmdResult {
    check_r(r)?;
    let (lambda, mu) = (parse_partition(lam)?, parse_partition(mu)?);
    let f = nekrasov_factor(&lambda, &mu, r).map_err(runtime)?;
    let expanded = f.expand();
    if csv_out {
        let mut w = csv::Writer::from_writer(std::io::stdout());
        w.write_record(["uexp", "qexp", "texp", "coefficient"])
            .map_err(runtime)?;
        for (e, c) in expanded.terms() {
            let rec = [
                e[Var::U.index()].to_string(),
                e[Var::Q.index()].to_string(),
                e[Var::T.index()].to_string(),
                c.to_string(),
            ];
            w.write_record(&rec).map_err(runtime)?;
        }
        w.flush().map_err(runtime)?;
    } else {
        let value = json!({
            "r": r,
            "lambda": lambda,
            "mu": mu,
            "u_offset": f.u_offset,
            "factors": f.factors,
            "expanded": expanded.to_string(),
        });
        emit(&value, None)?;
    }
    Ok(ExitCode::SUCCESS)
}

pub struct VerifyRequest {
    pub suite: String,
    pub r: u32,
    pub cores: Vec<String>,
    pub max_quot: u32,
    pub order_t: Option<u32>,
    pub cap_degree: u32,
    pub s_cap: u32,
    pub pieri_n: u32,
    pub report: Option<PathBuf>,
    pub no_timing: bool,
}

fn reading(cfg: &CliConfig) -> Result<PochhammerReading, CliError> {
    cfg.pochhammer
        .parse()
        .map_err(|e: wreath_core::Error| CliError::Usage(e.to_string()))
}

fn no_mode(mode: &str) -> Result<NoMode, CliError> {
    match mode {
        "exact" => Ok(NoMode::Exact),
        "series" => Ok(NoMode::Series),
        "auto" => Ok(NoMode::Both),
        _ => Err(CliError::Usage(format!(
            "mode {} is not available here; use exact, series or auto",
            mode
        ))),
    }
}

pub fn verify(cfg: &CliConfig, req: &VerifyRequest) -> CmdResult {
    check_r(req.r)?;
    let mode: SuiteMode = cfg
        .mode
        .parse()
        .map_err(|e: wreath_core::Error| CliError::Usage(e.to_string()))?;
    let cores = if req.cores.is_empty() {
        vec![Partition::empty()]
    } else {
        req.cores
            .iter()
            .map(|c| parse_core(c, req.r))
            .collect::<Result<_, _>>()?
    };
    let wreath_cfg = || {
        let mut w = WreathSuiteConfig::new(req.r, cores.clone(), req.max_quot);
        w.mode = mode;
        w.seed = cfg.seed;
        w.points = cfg.points;
        w
    };
    let report = match req.suite.as_str() {
        "ext-pairing" => ext_pairing_suite(&wreath_cfg()),
        "norm" => norm_suite(&wreath_cfg()),
        "pieri-skew" => pieri_suite(&wreath_cfg(), PieriKind::Skew, req.pieri_n),
        "pieri-mult" => pieri_suite(&wreath_cfg(), PieriKind::Mult, req.pieri_n),
        "tesler" => tesler_suite(&wreath_cfg()),
        "delta" => delta_suite(&wreath_cfg()),
        "trace" => TraceConfig::standard(req.r, req.cap_degree, req.order_t.unwrap_or(3)).and_then(|t| trace_check(&t)),
        "no-modular" => {
            let mut c = NoConfig::new(req.r, cores.clone(), req.order_t.unwrap_or(2));
            c.qt_cap = cfg.qt_cap;
            c.mode = no_mode(&cfg.mode)?;
            c.reading = reading(cfg)?;
            no_modular_verify(&c)
        }
        "no-classical" => classical_check(req.order_t.unwrap_or(3), reading(cfg)?),
        "no-weak" => {
            let mut c = WeakConfig::new(req.r, req.order_t.unwrap_or(6), req.s_cap);
            c.reading = reading(cfg)?;
            no_weak_form_verify(&c)
        }
        "elliptic" => {
            let mut c = EllipticConfig::new(req.r, cores.clone());
            c.order_t = req.order_t.unwrap_or(2);
            c.p_cap = cfg.p_cap;
            elliptic_core_independence(&c)
        }
        other => return Err(CliError::Usage(format!("unknown suite {}", other))),
    };
    let mut report: VerificationReport = report.map_err(runtime)?;
    if req.no_timing {
        report.wall_ms = 0;
    }
    eprintln!("{}", report.summary());
    for n in &report.notes {
        eprintln!("note: {}", n);
    }
    match &req.report {
        Some(p) => emit(&report.to_json(), Some(p))?,
        None => emit(&report.to_json(), None)?,
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn no_series(cfg: &CliConfig, r: u32, core: &str, order: u32, (sum, product): (bool, bool)) -> CmdResult {
    check_r(r)?;
    let core = parse_core(core, r)?;
    let reading = reading(cfg)?;
    let series = match cfg.mode.as_str() {
        "series" => true,
        "exact" | "auto" => false,
        m => {
            return Err(CliError::Usage(format!(
                "mode {} is not available here; use exact or series",
                m
            )))
        }
    };
    let mut out = json!({
        "r": r,
        "core": core,
        "order_t": order,
        "mode": if series { "series" } else { "exact" },
        "pochhammer": reading,
    });
    let coeffs = |f: &dyn Fn() -> wreath_core::Result<Vec<String>>| f().map_err(runtime);
    let (sum_side, product_side): (Option<Vec<String>>, Option<Vec<String>>) = if series {
        let cap = SeriesCap::qt(cfg.qt_cap).with_big_t(order);
        out["qt_cap"] = json!(cfg.qt_cap);
        let split = |s: wreath_core::TruncSeries| {
            (0..=order as i32)
                .map(|n| s.coefficient_in(Var::Grade, n).to_string())
                .collect::<Vec<_>>()
        };
        (
            if sum {
                Some(coeffs(&|| Ok(split(no_modular_sum_side(&core, r, cap)?)))?)
            } else {
                None
            },
            if product {
                Some(coeffs(&|| Ok(split(no_modular_product_side(r, cap, reading)?)))?)
            } else {
                None
            },
        )
    } else {
        let order = order as usize;
        let split =
            |s: wreath_core::UniSeries<wreath_core::RatFunc>| (0..=order).map(|n| s.coeff(n).canonical()).collect();
        (
            if sum {
                Some(coeffs(&|| Ok(split(no_modular_sum_side_exact(&core, r, order)?)))?)
            } else {
                None
            },
            if product {
                Some(coeffs(&|| {
                    Ok(split(no_modular_product_side_exact(r, order, reading)?))
                })?)
            } else {
                None
            },
        )
    };
    if let Some(s) = sum_side {
        out["sum"] = json!(s);
    }
    if let Some(p) = product_side {
        out["product"] = json!(p);
    }
    emit(&out, None)?;
    Ok(ExitCode::SUCCESS)
}
