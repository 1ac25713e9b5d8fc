use std::fmt;

use serde_json::{json, Value};

use semisimple_core::charwts::ChiSum;
use semisimple_core::criteria::{
    brauer_criterion, cross_validate, delta_grid, hecke_a_criterion, hecke_b_criterion, hecke_grid,
    walled_brauer_criterion, CrossOptions, CrossReport, DeltaParams, Engine, Outcome,
};
use semisimple_core::diagalg::{
    act_symmetric_on_tensor, act_walled_on_tensor, antisymmetrizer, brauer_kernel_element, gram_determinant,
    walled_kernel_element, AlgebraDescriptor, BasedAlgebra, Brauer, Element, HeckeA, WalledBrauer,
};
use semisimple_core::jsf::{jsf_sum, JsfReport, ParamRegime, QClass};
use semisimple_core::rootdata::{build_root_system, LieKind, LieType, RootSystem, Weight};
use semisimple_core::scalars::{ExactRat, Field, FieldValue};
use semisimple_core::tilting::{
    analyze_endomorphism, weyl_factors_mixed, weyl_factors_tensor_power, WeylMultiset,
};
use semisimple_core::Error;

use crate::args::{
    AlgebraArgs, Cli, Command, CrossArgs, EngineArg, Family, Format, IdempotentArgs, KernelFamily, MixedArgs, QArg,
    RegimeArgs, TiltingArgs, TypeArgs, WeightArgs,
};

pub enum Output {
    Json(Value),
    Csv(String),
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Core(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let json = match &cli.command {
        Command::Rootdata(a) => rootdata(a)?,
        Command::Jsf(a) => jsf(a, true)?,
        Command::Simple(a) => jsf(a, false)?,
        Command::Tilting(a) => tilting(a)?,
        Command::TiltingMixed(a) => tilting_mixed(a)?,
        Command::Criterion(a) => criterion(a)?,
        Command::Gram(a) => gram(a, cli.cap_basis)?,
        Command::IdempotentCheck(a) => idempotent_check(a, cli.cap_basis, cli.cap_tensor)?,
        Command::CrossValidate(a) => return cross(a, cli.cap_basis),
    };
    Ok(Output::Json(json))
}

fn system(ty: &TypeArgs) -> CliResult<RootSystem> {
    let kind: LieKind = ty.kind.parse()?;
    Ok(build_root_system(LieType::new(kind, ty.rank)?)?)
}

fn regime(a: &RegimeArgs) -> CliResult<ParamRegime> {
    let class = match (a.q, a.ell) {
        (QArg::Root, Some(ell)) => QClass::RootOfUnity(ell),
        (QArg::Root, None) => return usage("--q root needs --ell"),
        (_, Some(_)) => return usage("--ell only applies with --q root"),
        (QArg::One, None) => QClass::One,
        (QArg::Nonroot, None) => QClass::NonRoot,
    };
    Ok(ParamRegime::new(a.characteristic, class)?)
}

fn regime_json(a: &RegimeArgs) -> Value {
    let q = match a.q {
        QArg::One => "one",
        QArg::Root => "root",
        QArg::Nonroot => "nonroot",
    };
    json!({ "char": a.characteristic, "q": q, "ell": a.ell })
}

fn parse_field(s: &str) -> CliResult<Field> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Rationals);
    }
    let digits = t.trim_start_matches(['F', 'f']);
    match digits.parse::<u64>() {
        Ok(0) => Ok(Field::Rationals),
        Ok(p) => Ok(Field::prime(p)?),
        Err(_) => usage(format!("cannot read field {s:?}; use q or a prime")),
    }
}

fn parse_value(field: Field, s: &str) -> CliResult<FieldValue> {
    let r: ExactRat = s
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot read {s:?} as a rational number")))?;
    Ok(field.from_rational(&r)?)
}

fn parse_list(s: &str) -> CliResult<Vec<i64>> {
    let bad = || CliError::Usage(format!("cannot read list {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

fn parse_sizes(s: &str) -> CliResult<Vec<usize>> {
    parse_list(s)?
        .into_iter()
        .map(|x| usize::try_from(x).map_err(|_| CliError::Usage(format!("negative size {x}"))))
        .collect()
}

fn chi_json(sum: &ChiSum) -> Value {
    Value::Array(
        sum.iter()
            .map(|(w, c)| json!({ "weight": w.to_string(), "coefficient": c.to_string() }))
            .collect(),
    )
}

fn report_json(rep: &JsfReport, with_terms: bool) -> Value {
    let mut out = json!({
        "weight": rep.weight.to_string(),
        "regime": rep.regime.to_string(),
        "simple": rep.simple,
        "relies_on_nonroot_reading": rep.regime.relies_on_nonroot_reading(),
        "sum": chi_json(&rep.sum),
        "sum_display": rep.sum.to_string(),
    });
    if with_terms {
        out["terms"] = Value::Array(
            rep.terms
                .iter()
                .map(|t| {
                    json!({
                        "root": t.root.to_string(),
                        "k": t.k,
                        "coefficient": t.coefficient.to_string(),
                        "shifted": t.shifted.to_string(),
                        "singular": t.is_singular(),
                        "chi": chi_json(&t.chi),
                    })
                })
                .collect(),
        );
    }
    out
}

fn rootdata(a: &TypeArgs) -> CliResult<Value> {
    let sys = system(a)?;
    Ok(json!({
        "command": "rootdata",
        "input": { "type": a.kind.to_uppercase(), "rank": a.rank },
        "lie_type": sys.lie_type().to_string(),
        "vector_rep_dim": sys.vector_rep_dim(),
        "rho": sys.rho().to_string(),
        "simple_roots": sys.simple_roots().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "positive_roots": sys.positive_roots().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "vector_rep_weights": sys.vector_rep_weights().iter()
            .map(|(w, m)| json!({ "weight": w.to_string(), "multiplicity": m }))
            .collect::<Vec<_>>(),
    }))
}

fn jsf(a: &WeightArgs, with_terms: bool) -> CliResult<Value> {
    let sys = system(&a.ty)?;
    let reg = regime(&a.regime)?;
    let lambda: Weight = a.weight.parse()?;
    let rep = jsf_sum(&sys, &lambda, reg)?;
    Ok(json!({
        "command": if with_terms { "jsf" } else { "simple" },
        "input": {
            "type": a.ty.kind.to_uppercase(),
            "rank": a.ty.rank,
            "weight": a.weight,
            "regime": regime_json(&a.regime),
        },
        "lie_type": sys.lie_type().to_string(),
        "report": report_json(&rep, with_terms),
    }))
}

fn tilting_json(ws: &WeylMultiset, reg: ParamRegime) -> CliResult<Value> {
    let verdict = analyze_endomorphism(ws, reg)?;
    Ok(json!({
        "lie_type": ws.system().lie_type().to_string(),
        "regime": reg.to_string(),
        "factors": ws.iter()
            .map(|(w, m)| json!({ "weight": w.to_string(), "multiplicity": m.to_string() }))
            .collect::<Vec<_>>(),
        "total_dimension": ws.total_dimension()?.to_string(),
        "end_dim": verdict.end_dim.to_string(),
        "semisimple": verdict.semisimple,
        "witness": verdict.witness.as_ref().map(|(_, rep)| report_json(rep, true)),
    }))
}

fn tilting(a: &TiltingArgs) -> CliResult<Value> {
    let sys = system(&a.ty)?;
    let reg = regime(&a.regime)?;
    let ws = weyl_factors_tensor_power(&sys, a.d)?;
    let mut out = json!({
        "command": "tilting",
        "input": { "type": a.ty.kind.to_uppercase(), "rank": a.ty.rank, "d": a.d, "regime": regime_json(&a.regime) },
    });
    merge(&mut out, tilting_json(&ws, reg)?);
    Ok(out)
}

fn tilting_mixed(a: &MixedArgs) -> CliResult<Value> {
    let sys = build_root_system(LieType::new(LieKind::A, a.rank)?)?;
    let reg = regime(&a.regime)?;
    let ws = weyl_factors_mixed(&sys, a.r, a.s)?;
    let mut out = json!({
        "command": "tilting-mixed",
        "input": { "rank": a.rank, "r": a.r, "s": a.s, "regime": regime_json(&a.regime) },
    });
    merge(&mut out, tilting_json(&ws, reg)?);
    Ok(out)
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::HeckeA => "hecke-a",
        Family::HeckeB => "hecke-b",
        Family::Brauer => "brauer",
        Family::WalledBrauer => "walled-brauer",
    }
}

fn need<T: Copy>(x: Option<T>, flag: &str, family: Family) -> CliResult<T> {
    x.ok_or_else(|| CliError::Usage(format!("{} needs {flag}", family_name(family))))
}

fn sizes_json(a: &AlgebraArgs) -> Value {
    match a.family {
        Family::WalledBrauer => json!({ "r": a.r, "s": a.s }),
        _ => json!({ "d": a.d }),
    }
}

/// The field of an algebra command: `--field`, else `--char`.
fn algebra_field(a: &AlgebraArgs) -> CliResult<Field> {
    match &a.field {
        Some(f) => {
            let field = parse_field(f)?;
            if a.regime.characteristic != 0 && a.regime.characteristic != field.characteristic() {
                return usage("--field and --char disagree");
            }
            Ok(field)
        }
        None => Ok(Field::from_characteristic(a.regime.characteristic)?),
    }
}

fn descriptor(a: &AlgebraArgs) -> CliResult<AlgebraDescriptor> {
    let field = algebra_field(a)?;
    let fam = a.family;
    let delta = |a: &AlgebraArgs| -> CliResult<FieldValue> { Ok(field.from_int(need(a.delta, "--delta", fam)?)) };
    let q = |a: &AlgebraArgs| parse_value(field, a.q_value.as_deref().unwrap_or("1"));
    Ok(match fam {
        Family::HeckeA => AlgebraDescriptor::HeckeA { d: need(a.d, "--d", fam)?, q: q(a)? },
        Family::HeckeB => AlgebraDescriptor::HeckeB { d: need(a.d, "--d", fam)?, q: q(a)? },
        Family::Brauer => AlgebraDescriptor::Brauer { d: need(a.d, "--d", fam)?, delta: delta(a)? },
        Family::WalledBrauer => AlgebraDescriptor::WalledBrauer {
            r: need(a.r, "--r", fam)?,
            s: need(a.s, "--s", fam)?,
            delta: delta(a)?,
        },
    })
}

fn check_sizes(a: &AlgebraArgs) -> CliResult<()> {
    match a.family {
        Family::WalledBrauer => {
            if a.d.is_some() {
                return usage("walled-brauer takes --r and --s, not --d");
            }
            if need(a.r, "--r", a.family)? + need(a.s, "--s", a.family)? == 0 {
                return Err(Error::Domain("need r + s >= 1".into()).into());
            }
        }
        _ => {
            if a.r.is_some() || a.s.is_some() {
                return usage(format!("{} takes --d, not --r/--s", family_name(a.family)));
            }
            if need(a.d, "--d", a.family)? == 0 {
                return Err(Error::Domain("need d >= 1".into()).into());
            }
        }
    }
    Ok(())
}

fn criterion(a: &AlgebraArgs) -> CliResult<Value> {
    check_sizes(a)?;
    let mut out = json!({
        "command": "criterion",
        "family": family_name(a.family),
        "input": sizes_json(a),
    });
    match a.family {
        Family::HeckeA | Family::HeckeB => {
            if a.delta.is_some() {
                return usage("Hecke algebras take q, not --delta");
            }
            let reg = match &a.q_value {
                Some(v) => {
                    let q = parse_value(algebra_field(a)?, v)?;
                    ParamRegime::from_q(&q)?
                        .ok_or_else(|| Error::Domain("q = -1 is excluded by the criteria".into()))?
                }
                None => regime(&a.regime)?,
            };
            let d = need(a.d, "--d", a.family)?;
            let ss = if a.family == Family::HeckeA {
                hecke_a_criterion(d, reg)
            } else {
                hecke_b_criterion(d, reg)
            };
            out["input"]["regime"] = regime_json(&a.regime);
            out["input"]["q_value"] = json!(a.q_value);
            out["regime"] = json!(reg.to_string());
            out["semisimple"] = json!(ss);
        }
        Family::Brauer | Family::WalledBrauer => {
            if a.q_value.is_some() || a.regime.q != QArg::One || a.regime.ell.is_some() {
                return usage("Brauer-type algebras take --delta, not q");
            }
            let field = algebra_field(a)?;
            let delta = need(a.delta, "--delta", a.family)?;
            let dp = DeltaParams::new(field.characteristic(), delta.into())?;
            let ss = match a.family {
                Family::Brauer => brauer_criterion(need(a.d, "--d", a.family)?, &dp),
                _ => walled_brauer_criterion(need(a.r, "--r", a.family)?, need(a.s, "--s", a.family)?, &dp),
            };
            out["input"]["char"] = json!(field.characteristic());
            out["input"]["delta"] = json!(delta);
            out["delta_p"] = json!(dp.delta_p());
            out["semisimple"] = json!(ss);
        }
    }
    Ok(out)
}

fn gram(a: &AlgebraArgs, cap: usize) -> CliResult<Value> {
    check_sizes(a)?;
    let desc = descriptor(a)?;
    let det = gram_determinant(&desc, cap)?;
    let mut input = sizes_json(a);
    input["field"] = json!(desc.field().to_string());
    input["delta"] = json!(a.delta);
    input["q_value"] = json!(a.q_value);
    Ok(json!({
        "command": "gram",
        "family": family_name(a.family),
        "input": input,
        "algebra": desc.to_string(),
        "basis_size": desc.basis_len().to_string(),
        "det": det.to_string(),
        "semisimple": !det.is_zero(),
    }))
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

struct KernelCheck {
    parameter: Option<FieldValue>,
    terms: usize,
    scalar: i64,
    quasi: bool,
    zero_square: bool,
    action: Option<(usize, bool)>,
}

fn kernel_check<A: BasedAlgebra>(
    alg: &A,
    e: &Element<A::Basis>,
    scalar: i64,
    parameter: Option<FieldValue>,
) -> CliResult<KernelCheck> {
    let sq = alg.mul(e, e)?;
    Ok(KernelCheck {
        parameter,
        terms: e.len(),
        scalar,
        quasi: sq == e.scale(&alg.field().from_int(scalar))?,
        zero_square: sq.is_zero(),
        action: None,
    })
}

fn idempotent_check(a: &IdempotentArgs, cap_basis: usize, cap_tensor: usize) -> CliResult<Value> {
    let field = parse_field(&a.field)?;
    let need_size = |x: Option<usize>, flag: &str| {
        x.ok_or_else(|| CliError::Usage(format!("this kernel element needs {flag}")))
    };
    let check_cap = |len: u128| -> CliResult<()> {
        if len > cap_basis as u128 {
            return Err(Error::Resource(format!("basis of size {len} exceeds the cap {cap_basis}")).into());
        }
        Ok(())
    };
    let (input, check) = match a.family {
        KernelFamily::Symmetric => {
            let d = need_size(a.d, "--d")?;
            check_cap((1..=d as u128).product())?;
            let alg = HeckeA::new(d, field.one())?;
            let e = antisymmetrizer(d, field)?;
            let mut c = kernel_check(&alg, &e, factorial(d), None)?;
            if d >= 2 {
                let op = act_symmetric_on_tensor(&e, d, d - 1, cap_tensor)?;
                c.action = Some((d - 1, op.is_zero()));
            }
            (json!({ "d": d }), c)
        }
        KernelFamily::WalledBrauer => {
            let (r, s) = (need_size(a.r, "--r")?, need_size(a.s, "--s")?);
            if r + s == 0 {
                return Err(Error::Domain("need r + s >= 1".into()).into());
            }
            check_cap((1..=(r + s) as u128).product())?;
            let n = r + s - 1;
            let delta = field.from_int(n as i64);
            let alg = WalledBrauer::new(r, s, delta.clone())?;
            let e = walled_kernel_element(r, s, field)?;
            let mut c = kernel_check(&alg, &e, factorial(r) * factorial(s), Some(delta))?;
            if n >= 1 {
                let op = act_walled_on_tensor(&e, r, s, n, cap_tensor)?;
                c.action = Some((n, op.is_zero()));
            }
            (json!({ "r": r, "s": s }), c)
        }
        KernelFamily::Brauer => {
            let d = need_size(a.d, "--d")?;
            check_cap((1..=d as u128).map(|k| 2 * k - 1).product())?;
            let delta = field.from_int(-(2 * d as i64 - 2));
            let alg = Brauer::new(d, delta.clone())?;
            let e = brauer_kernel_element(d, field)?;
            (json!({ "d": d }), kernel_check(&alg, &e, factorial(d), Some(delta))?)
        }
    };
    let family = match a.family {
        KernelFamily::Symmetric => "symmetric",
        KernelFamily::WalledBrauer => "walled-brauer",
        KernelFamily::Brauer => "brauer",
    };
    let mut input = input;
    input["field"] = json!(field.to_string());
    Ok(json!({
        "command": "idempotent-check",
        "family": family,
        "input": input,
        "parameter": check.parameter.map(|v| v.to_string()),
        "terms": check.terms,
        "scalar": check.scalar.to_string(),
        "scalar_in_field": field.from_int(check.scalar).to_string(),
        "square_is_scalar_multiple": check.quasi,
        "square_is_zero": check.zero_square,
        "action": check.action.map(|(n, vanishes)| json!({ "n": n, "vanishes": vanishes })),
    }))
}

fn cross_cells(a: &CrossArgs) -> CliResult<Vec<AlgebraDescriptor>> {
    let primes: Vec<u64> = parse_list(&a.primes)?
        .into_iter()
        .map(|p| u64::try_from(p).map_err(|_| CliError::Usage(format!("bad prime {p}"))))
        .collect::<CliResult<_>>()?;
    let degrees = || -> CliResult<Vec<usize>> {
        match &a.d {
            Some(d) => parse_sizes(d),
            None => usage(format!("{} needs --d", family_name(a.family))),
        }
    };
    let deltas = parse_list(&a.deltas)?;
    Ok(match a.family {
        Family::HeckeA | Family::HeckeB => hecke_grid(a.family == Family::HeckeB, &degrees()?, &primes)?,
        Family::Brauer => {
            let sizes: Vec<(usize, usize)> = degrees()?.into_iter().map(|d| (d, 0)).collect();
            delta_grid(false, &sizes, &deltas, &primes)?
        }
        Family::WalledBrauer => {
            let mut sizes = Vec::new();
            if let Some(rs) = &a.rs {
                for pair in rs.split(',') {
                    let (r, s) = pair
                        .split_once(':')
                        .ok_or_else(|| CliError::Usage(format!("cannot read shape {pair:?}; use r:s")))?;
                    let parse = |x: &str| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| CliError::Usage(format!("cannot read shape {pair:?}")))
                    };
                    sizes.push((parse(r)?, parse(s)?));
                }
            }
            if let Some(t) = a.max_total {
                for total in 1..=t {
                    for r in (0..=total).rev() {
                        sizes.push((r, total - r));
                    }
                }
            }
            if sizes.is_empty() {
                return usage("walled-brauer needs --rs or --max-total");
            }
            delta_grid(true, &sizes, &deltas, &primes)?
        }
    })
}

fn outcome_cells(o: &Option<Outcome>) -> (String, String) {
    match o {
        None => ("".into(), "".into()),
        Some(Outcome::Verdict { semisimple, detail }) => (semisimple.to_string(), detail.clone()),
        Some(Outcome::Skipped(why)) => ("skipped".into(), why.clone()),
        Some(Outcome::Failed(why)) => ("failed".into(), why.clone()),
    }
}

fn cell_parts(cell: &AlgebraDescriptor) -> (String, String) {
    match cell {
        AlgebraDescriptor::HeckeA { d, q } | AlgebraDescriptor::HeckeB { d, q } => (format!("d={d}"), format!("q={q}")),
        AlgebraDescriptor::Brauer { d, delta } => (format!("d={d}"), format!("delta={delta}")),
        AlgebraDescriptor::WalledBrauer { r, s, delta } => (format!("r={r};s={s}"), format!("delta={delta}")),
    }
}

fn cross(a: &CrossArgs, cap_basis: usize) -> CliResult<Output> {
    if a.engines.is_empty() {
        return usage("no engine selected");
    }
    let cells = cross_cells(a)?;
    let engines: Vec<Engine> = a
        .engines
        .iter()
        .map(|e| match e {
            EngineArg::Gram => Engine::Gram,
            EngineArg::Jsf => Engine::Jsf,
        })
        .collect();
    let opts = CrossOptions { jobs: a.jobs, basis_cap: cap_basis, ..Default::default() };
    let reports = cross_validate(&cells, &engines, opts)?;
    match a.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Core(Error::Resource(format!("csv output failed: {e}")));
            w.write_record([
                "family", "size", "field", "parameter", "closed_form", "gram", "jsf", "agree", "gram_detail",
                "jsf_detail",
            ])
            .map_err(io)?;
            for r in &reports {
                let (size, param) = cell_parts(&r.cell);
                let (g, gd) = outcome_cells(&r.gram);
                let (j, jd) = outcome_cells(&r.jsf);
                let closed = r.closed_form.map(|b| b.to_string()).unwrap_or_else(|| "excluded".into());
                w.write_record([
                    r.cell.family().to_string(),
                    size,
                    r.cell.field().to_string(),
                    param,
                    closed,
                    g,
                    j,
                    r.agrees().to_string(),
                    gd,
                    jd,
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Core(Error::Resource(e.to_string())))?;
            Ok(Output::Csv(String::from_utf8(bytes).expect("csv output is utf-8")))
        }
        Format::Json => Ok(Output::Json(cross_json(a, &reports))),
    }
}

fn cross_json(a: &CrossArgs, reports: &[CrossReport]) -> Value {
    let outcome = |o: &Option<Outcome>| match o {
        None => Value::Null,
        Some(Outcome::Verdict { semisimple, detail }) => json!({ "status": "verdict", "semisimple": semisimple, "detail": detail }),
        Some(Outcome::Skipped(why)) => json!({ "status": "skipped", "detail": why }),
        Some(Outcome::Failed(why)) => json!({ "status": "failed", "detail": why }),
    };
    let cells: Vec<Value> = reports
        .iter()
        .map(|r| {
            let (size, param) = cell_parts(&r.cell);
            json!({
                "size": size,
                "field": r.cell.field().to_string(),
                "parameter": param,
                "closed_form": r.closed_form,
                "gram": outcome(&r.gram),
                "jsf": outcome(&r.jsf),
                "agree": r.agrees(),
            })
        })
        .collect();
    json!({
        "command": "cross-validate",
        "family": family_name(a.family),
        "cells": cells,
        "disagreements": reports.iter().filter(|r| !r.agrees()).count(),
        "all_agree": reports.iter().all(CrossReport::agrees),
    })
}
