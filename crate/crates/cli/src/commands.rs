//! Subcommand implementations.

use crate::{
    properties, ConfigError, Convention, ExpandArgs, Family, Format, IterintArgs, LfunArgs,
    LieArgs, LieCheck, Outcome, PlsArgs, SelftestArgs, SCHEMA,
};
use anyhow::Result;
use eisenworks::acceptance::{criterion_name, run_criterion, CRITERIA};
use eisenworks::freelie::{dimension_table, epsilon, rank_of_span};
use eisenworks::itereis::{
    build_i, eis_alphabet, jeqv_length1, log_degree_violations, mu_map,
    proportionality_to_eisenstein, shuffle_check, verify_base_point, verify_di, verify_dj,
};
use eisenworks::lfun::{eisenstein_lambda_check, lambda_completed, lambda_holomorphic_reference};
use eisenworks::pls::{check_lds, rho_of_bracket};
use eisenworks::qseries::eisenstein_q;
use eisenworks::raeis::build_real_eisenstein;
use eisenworks::{
    AcceptanceConfig, BiSeries, EisLetter, LSeriesData, Rational, RhoConvention, Variant,
};
use num_complex::Complex64;
use rayon::prelude::*;
use serde_json::{json, Value};

const MAX_EXPAND_ORDER: u32 = 64;
const MAX_ITERINT_ORDER: u32 = 24;
const MAX_ITERINT_WEIGHT: u32 = 12;
const MAX_JEQV_ORDER: u32 = 16;
const MAX_TERMS: usize = 10_000_000;

fn config_err(msg: impl Into<String>) -> anyhow::Error {
    ConfigError(msg.into()).into()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(config_err(msg()))
    }
}

fn render_json(mut body: Value, command: &str) -> String {
    let map = body.as_object_mut().expect("object body");
    map.insert("schema".into(), json!(SCHEMA));
    map.insert("command".into(), json!(command));
    let mut s = serde_json::to_string_pretty(&body).expect("serializable");
    s.push('\n');
    s
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn rational_json(r: &Rational) -> Value {
    if r.is_integer() {
        if let Ok(i) = r.to_integer().to_string().parse::<i64>() {
            return json!(i);
        }
    }
    json!(r.to_string())
}

fn series_terms(f: &BiSeries) -> Vec<Value> {
    f.terms()
        .map(|((k, m, n), c)| json!({ "k": k, "m": m, "n": n, "coeff": c }))
        .collect()
}

fn series_rows(f: &BiSeries) -> impl Iterator<Item = Vec<String>> + '_ {
    f.terms()
        .map(|((k, m, n), c)| vec![k.to_string(), m.to_string(), n.to_string(), c.to_string()])
}

pub fn expand(a: &ExpandArgs) -> Result<Outcome> {
    ensure(a.order >= 1 && a.order <= MAX_EXPAND_ORDER, || {
        format!("--order must lie in 1..={MAX_EXPAND_ORDER}")
    })?;
    let w = a.weight;
    let (r, s) = match &a.component {
        Some(c) => (c[0], c[1]),
        None => (w, 0),
    };
    let f = match a.family {
        Family::Eis => {
            ensure(r + s == w, || {
                format!("component ({r}, {s}) does not have weight {w}")
            })?;
            build_real_eisenstein(w, a.order)?
                .component(r, s)
                .cloned()
                .ok_or_else(|| config_err(format!("no component ({r}, {s})")))?
        }
        Family::Holo => {
            ensure((r, s) == (w, 0), || {
                "the holomorphic family has component (k, 0)".into()
            })?;
            eisenstein_q(w, a.order)?
        }
    };
    let artifact = match a.format {
        Format::Csv => csv_string(&["k", "m", "n", "coeff"], series_rows(&f))?,
        Format::Json => render_json(
            json!({
                "family": family_name(a.family),
                "weights": [r, s],
                "truncation": a.order,
                "pole_order": f.pole_order(),
                "terms": series_terms(&f),
            }),
            "expand",
        ),
    };
    Ok(Outcome { artifact, ok: true })
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Eis => "eis",
        Family::Holo => "holo",
    }
}

pub fn lie(a: &LieArgs) -> Result<Outcome> {
    if a.verify == Some(LieCheck::Pollack) {
        let (pairs, expected): (&[(u32, u32)], Vec<i64>) = match a.relation {
            1 => (&[(10, 4), (8, 6)], vec![1, -3]),
            2 => (&[(14, 4), (12, 6), (10, 8)], vec![2, -7, 11]),
            n => return Err(config_err(format!("--relation {n}: expected 1 or 2"))),
        };
        let brackets = pairs
            .iter()
            .map(|&(i, j)| Ok(epsilon(i, Variant::Dual)?.bracket(&epsilon(j, Variant::Dual)?)))
            .collect::<eisenworks::Result<Vec<_>>>()?;
        let (rank, kernel) = rank_of_span(&brackets)?;
        let relation: Vec<Value> = match kernel.as_slice() {
            [v] => v.iter().map(rational_json).collect(),
            _ => Vec::new(),
        };
        let expected_json: Vec<Value> = expected.iter().map(|c| json!(c)).collect();
        let verified = kernel.len() == 1 && relation == expected_json;
        let weightpair: Vec<u32> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
        let artifact = render_json(
            json!({
                "relation": relation,
                "weightpair": weightpair,
                "rank": rank,
                "verified": verified,
            }),
            "lie",
        );
        return Ok(Outcome {
            artifact,
            ok: verified,
        });
    }
    if a.table {
        let table = dimension_table(a.maxlen, a.window)?;
        let matches = table
            .poincare
            .iter()
            .all(|(_, _, rank, c)| *rank as i64 == *c);
        let artifact = render_json(
            json!({
                "maxlen": a.maxlen,
                "window": a.window,
                "rows": table.rows,
                "poincare": table.poincare.iter().map(|(k, d, rank, c)| json!({
                    "k": k, "a_degree": d, "rank": rank, "series_coefficient": c,
                })).collect::<Vec<_>>(),
                "poincare_matches": matches,
            }),
            "lie",
        );
        return Ok(Outcome {
            artifact,
            ok: matches,
        });
    }
    Err(config_err("lie: pass --verify pollack or --table"))
}

pub fn pls(a: &PlsArgs) -> Result<Outcome> {
    let (i, j) = (a.check_bracket[0], a.check_bracket[1]);
    let convention = match a.convention {
        Convention::Verbatim => RhoConvention::Verbatim,
        Convention::LeadingB => RhoConvention::LeadingB,
    };
    let report = check_lds(&rho_of_bracket(i, j, convention)?)?;
    let passes = report.passes();
    let artifact = render_json(
        json!({
            "bracket": [i, j],
            "convention": match a.convention {
                Convention::Verbatim => "verbatim",
                Convention::LeadingB => "leading-b",
            },
            "depth": report.depth,
            "residues": report.residues,
            "passes": passes,
        }),
        "pls",
    );
    Ok(Outcome {
        artifact,
        ok: passes,
    })
}

fn word_label(w: &[EisLetter]) -> String {
    let parts: Vec<String> = w.iter().map(|l| format!("{}^{}", l.weight, l.m)).collect();
    format!("[{}]", parts.join(","))
}

pub fn iterint(a: &IterintArgs) -> Result<Outcome> {
    if a.jeqv1 {
        return jeqv1(a);
    }
    ensure(a.order >= 1 && a.order <= MAX_ITERINT_ORDER, || {
        format!("--order must lie in 1..={MAX_ITERINT_ORDER}")
    })?;
    ensure(
        a.maxweight >= 4 && a.maxweight <= MAX_ITERINT_WEIGHT,
        || format!("--maxweight must lie in 4..={MAX_ITERINT_WEIGHT}"),
    )?;
    let i = build_i(a.maxlen, a.maxweight, a.order)?;
    if a.emit == Format::Csv {
        let rows = i.terms().flat_map(|(w, h)| {
            let label = word_label(w);
            h.terms()
                .map(move |((qi, lj), c)| {
                    vec![label.clone(), qi.to_string(), lj.to_string(), c.to_string()]
                })
                .collect::<Vec<_>>()
        });
        let artifact = csv_string(&["word", "q_power", "log_power", "coeff"], rows)?;
        return Ok(Outcome { artifact, ok: true });
    }
    let shuffle = shuffle_check(&i, &eis_alphabet(a.maxweight));
    let log_violations = log_degree_violations(&i);
    let base = verify_base_point(&i);
    let di = verify_di(&i, a.maxweight)?;
    let dj = verify_dj(&mu_map(&i), a.maxweight)?;
    let ok = shuffle.passes()
        && log_violations.is_empty()
        && base
        && di.passes()
        && dj.twisted.passes()
        && dj.gauge.passes();
    let artifact = render_json(
        json!({
            "maxlen": a.maxlen,
            "maxweight": a.maxweight,
            "order": a.order,
            "words": i.terms().count(),
            "checks": {
                "shuffle": shuffle,
                "log_degree_violations": log_violations,
                "base_point": base,
                "di": di,
                "dj": dj.twisted,
                "dj_gauge": dj.gauge,
            },
            "dj_literal": dj.literal,
            "passed": ok,
        }),
        "iterint",
    );
    Ok(Outcome { artifact, ok })
}

fn jeqv1(a: &IterintArgs) -> Result<Outcome> {
    let w = a.weight.expect("clap enforces --weight");
    ensure(a.order >= 1 && a.order <= MAX_JEQV_ORDER, || {
        format!("--order must lie in 1..={MAX_JEQV_ORDER} with --jeqv1")
    })?;
    let f = jeqv_length1(w, a.order)?;
    let scalar = proportionality_to_eisenstein(&f)?;
    let ok = scalar.is_some();
    let artifact = match a.emit {
        Format::Csv => {
            let rows = f.components().iter().flat_map(|((r, s), g)| {
                series_rows(g)
                    .map(|row| {
                        let mut full = vec![r.to_string(), s.to_string()];
                        full.extend(row);
                        full
                    })
                    .collect::<Vec<_>>()
            });
            csv_string(&["r", "s", "k", "m", "n", "coeff"], rows)?
        }
        Format::Json => {
            let components: Vec<Value> = f
                .components()
                .iter()
                .map(|((r, s), g)| json!({ "weights": [r, s], "terms": series_terms(g) }))
                .collect();
            render_json(
                json!({
                    "mode": "jeqv1",
                    "weight": w,
                    "order": a.order,
                    "scalar": scalar,
                    "proportional": ok,
                    "components": components,
                }),
                "iterint",
            )
        }
    };
    Ok(Outcome { artifact, ok })
}

pub fn lfun(a: &LfunArgs) -> Result<Outcome> {
    let (r, s) = (a.weights[0], a.weights[1]);
    ensure(a.terms >= 1 && a.terms <= MAX_TERMS, || {
        format!("--terms must lie in 1..={MAX_TERMS}")
    })?;
    ensure(a.s.is_finite(), || "--s must be finite".into())?;
    let point = Complex64::new(a.s, 0.0);
    let (value, reference) = match a.family {
        Family::Eis => {
            let data = LSeriesData::eisenstein(r, s, a.terms)?;
            let v = lambda_completed(&data, point)?;
            let reference = if r + s == 2 {
                Some(eisenstein_lambda_check(r, s, a.s, a.terms)?.reference)
            } else {
                None
            };
            (v, reference)
        }
        Family::Holo => {
            ensure(s == 0, || {
                "the holomorphic family has weights (k, 0)".into()
            })?;
            let data = LSeriesData::holomorphic_eisenstein(r, a.terms)?;
            let v = lambda_completed(&data, point)?;
            (v, Some(lambda_holomorphic_reference(r, point).re))
        }
    };
    let discrepancy = reference.map(|x| (value.re - x).abs() / x.abs());
    let ok = discrepancy.is_none_or(|d| d < a.tolerance);
    let artifact = render_json(
        json!({
            "family": family_name(a.family),
            "weights": [r, s],
            "s": a.s,
            "terms": a.terms,
            "value": value.re,
            "imag": value.im,
            "tail_bound": value.tail_bound,
            "reference": reference,
            "discrepancy": discrepancy,
            "tolerance": a.tolerance,
            "passed": ok,
        }),
        "lfun",
    );
    Ok(Outcome { artifact, ok })
}

pub fn selftest(a: &SelftestArgs) -> Result<Outcome> {
    ensure((4..=24).contains(&a.order), || {
        "--order must lie in 4..=24".into()
    })?;
    ensure((2..=12).contains(&a.product_order), || {
        "--product-order must lie in 2..=12".into()
    })?;
    ensure((1000..=MAX_TERMS).contains(&a.terms), || {
        format!("--terms must lie in 1000..={MAX_TERMS}")
    })?;
    if let Some(bad) = a.criteria.iter().find(|id| **id == 0 || **id > CRITERIA) {
        return Err(config_err(format!("no criterion {bad}")));
    }
    let ids: Vec<u32> = if a.criteria.is_empty() {
        (1..=CRITERIA).collect()
    } else {
        let mut v = a.criteria.clone();
        v.sort_unstable();
        v.dedup();
        v
    };
    let config = AcceptanceConfig {
        order: a.order,
        product_order: a.product_order,
        dirichlet_terms: a.terms,
    };
    let results: Vec<_> = ids
        .par_iter()
        .map(|&id| run_criterion(id, &config))
        .collect();
    for r in &results {
        eprintln!("{}", r.line());
    }
    let props = properties::run(a.seed, a.cases);
    for p in &props {
        eprintln!(
            "{} property {}: {}/{} cases",
            if p.failures == 0 { "PASS" } else { "FAIL" },
            p.name,
            p.cases - p.failures,
            p.cases
        );
    }
    let ok = results.iter().all(|r| r.passed) && props.iter().all(|p| p.failures == 0);
    let criteria: Vec<Value> = results
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "name": criterion_name(r.id),
                "passed": r.passed,
                "detail": r.detail,
            })
        })
        .collect();
    let artifact = render_json(
        json!({
            "config": {
                "order": a.order,
                "product_order": a.product_order,
                "terms": a.terms,
                "seed": a.seed,
                "cases": a.cases,
            },
            "criteria": criteria,
            "properties": props,
            "passed": ok,
        }),
        "selftest",
    );
    Ok(Outcome { artifact, ok })
}
