use std::fs;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::json;

use qacodes::algebra::AbelianGroup;
use qacodes::concatenation::{constituents_of, distance_bound, predict_params, PredictComponent};
use qacodes::descriptor::{CodeDescriptor, QaDescriptor, SearchReport};
use qacodes::families::{builtin_lcd_outer_codes, family_decomposition, family_report, FamilySpec};
use qacodes::idempotents::SemisimpleDecomposition;
use qacodes::linear_codes::{first_min_weight_codeword, weight_distribution_with, CodeParams, Distance, LinearCode};
use qacodes::search::{search_with, SearchCaps, SearchSpec};
use qacodes::Exec;

use crate::checks;
use crate::{AlgebraArgs, Cli, Command};

pub fn run(cli: &Cli) -> Result<()> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let json = cli.json;
    match &cli.command {
        Command::Classes(a) => classes(a, json),
        Command::Decompose(a) => decompose(a, json),
        Command::Construct { code, out, cap } => construct(code, out.as_deref(), *cap, exec, json),
        Command::Constituents { code, group } => constituents(code, group, json),
        Command::Bound { code, predict, cap } => match (code, predict) {
            (Some(c), _) => bound(c, *cap, exec, json),
            (None, Some(p)) => predict_bound(p, json),
            (None, None) => bail!("either --code or --predict is required"),
        },
        Command::Distance { code, cap } => distance(code, *cap, exec, json),
        Command::Search {
            q,
            group,
            index,
            dmin,
            dim,
            outer_codes,
            out,
            cap,
            max_candidates,
        } => {
            let mut spec = SearchSpec::new(*q, AbelianGroup::new(group.clone())?, *index, *dmin);
            spec.dim_target = *dim;
            spec.outer_codes = *outer_codes;
            spec.caps = SearchCaps {
                enumeration: *cap,
                candidates: *max_candidates,
                ..SearchCaps::default()
            };
            search(&spec, out.as_deref(), exec, json)
        }
        Command::Family {
            q,
            p,
            outer,
            max_length,
            lcd,
            out,
            cap,
        } => family(
            *q,
            *p,
            outer.as_deref(),
            *max_length,
            *lcd,
            out.as_deref(),
            *cap,
            exec,
            json,
        ),
        Command::Reproduce { seed, samples } => reproduce(*seed, *samples, exec, json),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {path}"))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn algebra(a: &AlgebraArgs) -> Result<SemisimpleDecomposition> {
    let group = AbelianGroup::new(a.group.clone())?;
    let modulus = match &a.modulus {
        Some(m) => Some(qacodes::algebra::parse_digits(
            m,
            qacodes::algebra::prime_power(a.q)?.0,
        )?),
        None => None,
    };
    Ok(SemisimpleDecomposition::new(&group, a.q, modulus)?)
}

fn field_line(d: &SemisimpleDecomposition) -> String {
    let f = d.field();
    let root = f.root().expect("splitting field has a designated root");
    format!(
        "K = F_{} (degree {} over F_{}), modulus {}, xi = g^{} of order {}",
        f.size(),
        f.tower_degree(),
        f.q(),
        f.modulus_string(),
        root.exponent,
        root.order
    )
}

fn field_json(d: &SemisimpleDecomposition) -> serde_json::Value {
    let f = d.field();
    let root = f.root().expect("splitting field has a designated root");
    json!({
        "q": f.q(),
        "group": d.group().factors(),
        "tower_degree": f.tower_degree(),
        "modulus": f.modulus_string(),
        "xi": { "order": root.order, "exponent": root.exponent },
    })
}

fn classes(a: &AlgebraArgs, json: bool) -> Result<()> {
    let d = algebra(a)?;
    if json {
        let classes: Vec<_> = d
            .classes()
            .iter()
            .map(|c| json!({ "rep": c.rep.0, "size": c.size(), "members": c.members.iter().map(|m| &m.0).collect::<Vec<_>>() }))
            .collect();
        let mut v = field_json(&d);
        v["classes"] = json!(classes);
        return print_json(&v);
    }
    println!("{}", field_line(&d));
    for c in d.classes() {
        let members: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
        println!("rep={} size={} members=[{}]", c.rep, c.size(), members.join(","));
    }
    println!("field degrees: {:?}", d.field_degrees());
    Ok(())
}

fn decompose(a: &AlgebraArgs, json: bool) -> Result<()> {
    let d = algebra(a)?;
    let f = d.field();
    let fmt_vec = |v: &[qacodes::algebra::Fe]| v.iter().map(|&x| f.format(x)).collect::<Vec<_>>();
    if json {
        let classes: Vec<_> = (0..d.num_classes())
            .map(|i| {
                let b = d.ideal_basis_data(i);
                json!({
                    "rep": d.classes()[i].rep.0,
                    "degree": d.field_degrees()[i],
                    "idempotent": fmt_vec(d.idempotent(i).coeffs()),
                    "basis_element": d.group().element(b.generator_element).0,
                    "xi": f.format(b.xi),
                })
            })
            .collect();
        let mut v = field_json(&d);
        v["classes"] = json!(classes);
        v["identities_verified"] = json!(true);
        return print_json(&v);
    }
    println!("{}", field_line(&d));
    for i in 0..d.num_classes() {
        let b = d.ideal_basis_data(i);
        println!(
            "class {i} rep={} degree={} basis from Y^{} (xi_i = {})",
            d.classes()[i].rep,
            d.field_degrees()[i],
            d.group().element(b.generator_element),
            f.format(b.xi)
        );
        println!("  e = {}", fmt_vec(d.idempotent(i).coeffs()).join(" "));
    }
    println!("idempotent identities verified");
    Ok(())
}

fn construct(path: &str, out: Option<&str>, cap: u64, exec: Exec, json: bool) -> Result<()> {
    let desc: QaDescriptor = read_json(path)?;
    let qa = desc.build()?;
    let params = qa.params(cap, exec)?;
    let code = CodeDescriptor::from_code(qa.flattened());
    if let Some(out) = out {
        fs::write(out, serde_json::to_string_pretty(&code)?).with_context(|| format!("writing {out}"))?;
    }
    if json {
        return print_json(&json!({ "params": params, "code": code }));
    }
    println!("{params}");
    for (&i, c) in qa.assignment() {
        let d = qa.decomposition();
        println!(
            "class rep={} degree={} outer dimension {}",
            d.classes()[i].rep,
            d.field_degrees()[i],
            c.dimension()
        );
    }
    Ok(())
}

/// Decomposition matching the field a code descriptor was written in.
fn decomposition_for(desc: &CodeDescriptor, group: &[u32]) -> Result<Arc<SemisimpleDecomposition>> {
    let group = AbelianGroup::new(group.to_vec())?;
    let plain = SemisimpleDecomposition::new(&group, desc.q, None)?;
    let modulus = match (&desc.modulus, desc.tower_degree) {
        (Some(m), Some(t)) if t == plain.field().tower_degree() => {
            Some(qacodes::algebra::parse_digits(m, plain.field().characteristic())?)
        }
        _ => None,
    };
    match modulus {
        Some(m) if m != plain.field().modulus() => Ok(Arc::new(SemisimpleDecomposition::new(&group, desc.q, Some(m))?)),
        _ => Ok(Arc::new(plain)),
    }
}

fn constituents(path: &str, group: &[u32], json: bool) -> Result<()> {
    let desc: CodeDescriptor = read_json(path)?;
    if desc.field_degree != 1 {
        bail!("the code must be linear over F_q (field_degree 1)");
    }
    let d = decomposition_for(&desc, group)?;
    let code = desc.to_code_in(d.field().clone())?;
    let n = d.group().order();
    if code.length() % n != 0 {
        bail!("length {} is not a multiple of |H| = {n}", code.length());
    }
    let index = code.length() / n;
    let assignment = constituents_of(&d, index, &code)?;
    let out = QaDescriptor::from_assignment(&d, index, &assignment);
    if json {
        return print_json(&out);
    }
    println!("index {index}, {} nonzero constituents", out.constituents.len());
    for c in &out.constituents {
        let member = qacodes::algebra::GroupElement(c.class_member.clone());
        println!("class rep={member} dimension {}", c.generators.len());
        for row in &c.generators {
            println!("  {}", row.join(" "));
        }
    }
    Ok(())
}

fn bound(path: &str, cap: u64, exec: Exec, json: bool) -> Result<()> {
    let desc: QaDescriptor = read_json(path)?;
    let qa = desc.build()?;
    let report = distance_bound(&qa, cap, exec)?;
    if json {
        return print_json(&report);
    }
    let d = qa.decomposition();
    for s in &report.steps {
        println!(
            "class rep={} d(outer)={} d(inner sum)={} product={}",
            d.classes()[s.key].rep,
            s.outer_distance,
            s.inner_distance,
            s.product
        );
    }
    println!("{}", report.value);
    Ok(())
}

/// Input of `bound --predict`: claimed component parameters and the
/// distances of the inner prefix sums, in bound order.
#[derive(Debug, Deserialize)]
struct PredictInput {
    components: Vec<PredictComponent>,
    prefix_distances: Vec<usize>,
}

fn predict_bound(path: &str, json: bool) -> Result<()> {
    let input: PredictInput = read_json(path)?;
    let prediction =
        predict_params(&input.components, |keys| {
            input.prefix_distances.get(keys.len() - 1).copied().ok_or_else(|| {
                qacodes::Error::Invalid(format!("no prefix distance given for {} inner codes", keys.len()))
            })
        })?;
    if json {
        return print_json(&prediction);
    }
    println!("{}", prediction.params);
    Ok(())
}

fn distance(path: &str, cap: u64, exec: Exec, json: bool) -> Result<()> {
    let desc: CodeDescriptor = read_json(path)?;
    let code = desc.to_code()?;
    let wd = weight_distribution_with(&code, cap, exec)?;
    let first = if code.dimension() > 0 {
        Some(first_min_weight_codeword(&code, cap, exec)?)
    } else {
        None
    };
    let d = first.as_ref().map_or(0, |w| w.distance);
    let params = CodeParams {
        length: code.length(),
        dimension: code.dimension(),
        distance: Distance::Exact(d),
    };
    let f = code.field().spec();
    let word = first
        .as_ref()
        .map(|w| w.codeword.iter().map(|&x| f.format(x)).collect::<Vec<_>>());
    if json {
        return print_json(&json!({ "params": params, "weight_distribution": wd, "first_min_weight_codeword": word }));
    }
    println!("{params}");
    let weights: Vec<String> = wd
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(w, a)| format!("{w}:{a}"))
        .collect();
    println!("weights {}", weights.join(" "));
    if let Some(word) = word {
        println!("first minimum-weight codeword {}", word.join(" "));
    }
    Ok(())
}

fn search(spec: &SearchSpec, out: Option<&str>, exec: Exec, json: bool) -> Result<()> {
    let result = search_with(spec, exec)?;
    let report = SearchReport::new(spec, &result);
    if let Some(out) = out {
        fs::write(out, serde_json::to_string_pretty(&report)?).with_context(|| format!("writing {out}"))?;
    }
    if json {
        return print_json(&report);
    }
    for s in &report.stats {
        println!("stage {}: {} candidates, {} kept", s.stage, s.generated, s.kept);
    }
    println!("{} weight distributions", report.codes.len());
    for h in &report.codes {
        let weights: Vec<String> = h
            .weight_distribution
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &a)| a > 0)
            .map(|(w, a)| format!("{w}:{a}"))
            .collect();
        println!(
            "{} assignments={} weights {}",
            h.params,
            h.assignments,
            weights.join(" ")
        );
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn family(
    q: u64,
    p: u32,
    outer: Option<&str>,
    max_length: usize,
    lcd: bool,
    out: Option<&str>,
    cap: u64,
    exec: Exec,
    json: bool,
) -> Result<()> {
    let d = family_decomposition(q, p)?;
    let codes: Vec<LinearCode> = match outer {
        Some(path) => {
            let descs: Vec<CodeDescriptor> = read_json(path)?;
            descs
                .iter()
                .map(|c| {
                    if c.field_degree != 1 {
                        bail!("outer codes must be linear over F_q (field_degree 1)");
                    }
                    Ok(c.to_code_in(d.field().clone())?)
                })
                .collect::<Result<_>>()?
        }
        None => builtin_lcd_outer_codes(&d, max_length, qacodes::linear_codes::DEFAULT_SUBSPACE_CAP)?,
    };
    let spec = FamilySpec::new(d, codes, lcd)?;
    let rows = family_report(&spec, cap, exec)?;
    if json {
        return print_json(&rows);
    }
    let sink: Box<dyn std::io::Write> = match out {
        Some(path) => Box::new(fs::File::create(path).with_context(|| format!("creating {path}"))?),
        None => Box::new(std::io::stdout()),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record([
        "i",
        "n_i",
        "length",
        "dim",
        "distance_exact_or_bound",
        "rate",
        "rel_distance",
        "lcd",
    ])?;
    for r in &rows {
        let distance = match r.distance {
            Distance::Exact(v) => v.to_string(),
            Distance::AtLeast(v) => format!(">={v}"),
        };
        w.write_record([
            r.i.to_string(),
            r.n_i.to_string(),
            r.length.to_string(),
            r.dim.to_string(),
            distance,
            format!("{:.6}", r.rate),
            format!("{:.6}", r.rel_distance),
            r.lcd.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn reproduce(seed: u64, samples: usize, exec: Exec, json: bool) -> Result<()> {
    let lines = checks::verify_all(seed, samples, exec);
    if json {
        print_json(&lines)?;
    } else {
        for l in &lines {
            println!("{} {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.name, l.detail);
        }
    }
    let failed = lines.iter().filter(|l| !l.pass).count();
    if failed > 0 {
        return Err(checks::Failed(failed).into());
    }
    Ok(())
}
