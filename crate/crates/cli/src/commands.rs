use qlab_core::hirota::bkp_check_with;
use qlab_core::io::{hierarchy_to_json, mono_to_json, poly_to_json, render_tau};
use qlab_core::oracle::{
    eval_powersums, q_lambda_sym, q_lambda_sym_at, qa_sym, qa_sym_at, MAX_VARS,
};
use qlab_core::{
    bkp_generate, is_bkp_tau_bilinear, multiparam_q, p_to_x, q_lambda, ratio, PPoly, Rat,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::input::{
    check_weight, index_weight, params_for, parse_index, parse_params, parse_positive_index,
    parse_tau, usage, Result,
};
use crate::{Basis, Format};

fn poly_json(f: &PPoly, basis: Basis) -> Value {
    match basis {
        Basis::P => poly_to_json(f),
        Basis::X => poly_to_json(&p_to_x(f)),
    }
}

fn emit_poly(f: &PPoly, basis: Basis, format: Format) {
    match format {
        Format::Text => println!("{}", render_tau(f, basis == Basis::X)),
        Format::Json => println!("{}", poly_json(f, basis)),
    }
}

pub fn q(lambda: &str, basis: Basis, format: Format) -> Result<bool> {
    let lambda = parse_index(lambda)?;
    check_weight("weight", index_weight(&lambda))?;
    emit_poly(&q_lambda(&lambda), basis, format);
    Ok(true)
}

pub fn qa(alpha: &str, params: &str, basis: Basis, format: Format) -> Result<bool> {
    let alpha = parse_positive_index(alpha)?;
    check_weight("weight", index_weight(&alpha))?;
    let a = params_for(&parse_params(params)?, &alpha)?;
    emit_poly(&multiparam_q(&alpha, &a)?, basis, format);
    Ok(true)
}

pub fn hierarchy(max_weight: u32, raw: bool, format: Format) -> Result<bool> {
    check_weight("max weight", max_weight as u64)?;
    let eqs = bkp_generate(max_weight)?;
    match format {
        Format::Text => {
            for e in &eqs {
                if raw {
                    println!("{} : {}", e.y.render("y"), e.raw);
                } else {
                    println!("{}", e.listing_line());
                }
            }
        }
        Format::Json => println!("{}", hierarchy_to_json(&eqs, raw)),
    }
    Ok(true)
}

pub fn check_bkp(tau: &str, max_weight: u32, format: Format) -> Result<bool> {
    check_weight("max weight", max_weight as u64)?;
    let f = parse_tau(tau)?;
    let eqs = bkp_generate(max_weight)?;
    let report = bkp_check_with(&f, &eqs);
    match format {
        Format::Text => {
            let verdict = if report.pass { "PASS" } else { "FAIL" };
            println!(
                "{verdict}: {} equations up to weight {max_weight} on τ = {f}",
                report.checks.len()
            );
            for c in report.failures() {
                println!("{} : {} => {}", c.y.render("y"), c.equation, c.residual);
            }
        }
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "y": mono_to_json(&c.y),
                        "equation": poly_to_json(&c.equation),
                        "residual": poly_to_json(&c.residual),
                    })
                })
                .collect();
            println!(
                "{}",
                json!({"pass": report.pass, "max_weight": max_weight, "tau": poly_to_json(&f), "checks": checks})
            );
        }
    }
    Ok(report.pass)
}

pub fn check_bilinear(tau: &str, format: Format) -> Result<bool> {
    let f = parse_tau(tau)?;
    let report = is_bkp_tau_bilinear(&f);
    match format {
        Format::Text => {
            if report.holds {
                println!("PASS: Ω(τ⊗τ) = τ⊗τ for τ = {f}");
            } else {
                println!(
                    "FAIL: Ω(τ⊗τ) - τ⊗τ has {} terms for τ = {f}",
                    report.discrepancy.len()
                );
                println!("{}", report.discrepancy);
            }
        }
        Format::Json => {
            let discrepancy: Vec<Value> = report
                .discrepancy
                .terms()
                .map(|(a, b, c)| {
                    json!({"left": mono_to_json(a), "right": mono_to_json(b), "coef": qlab_core::ring::format_rat(c)})
                })
                .collect();
            println!(
                "{}",
                json!({"pass": report.holds, "tau": poly_to_json(&f), "discrepancy": discrepancy})
            );
        }
    }
    Ok(report.holds)
}

pub struct OracleJob {
    pub max_size: u32,
    pub vars: usize,
    pub points: usize,
    pub seed: u64,
    pub params: Option<String>,
    pub polynomial: bool,
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::with_capacity(n);
    while out.len() < n {
        let r = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7));
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn strict_partitions(max: i64) -> Vec<Vec<i64>> {
    fn go(rem: i64, largest: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        for part in (1..=largest.min(rem)).rev() {
            cur.push(part);
            out.push(cur.clone());
            go(rem - part, part - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, max, &mut Vec::new(), &mut out);
    out
}

fn compositions(max: i64) -> Vec<Vec<i64>> {
    fn go(rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        for part in 1..=rem {
            cur.push(part);
            out.push(cur.clone());
            go(rem - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, &mut Vec::new(), &mut out);
    out
}

pub fn oracle_compare(job: &OracleJob) -> Result<bool> {
    if job.vars == 0 || job.vars > MAX_VARS {
        return Err(usage(format!("--vars must be between 1 and {MAX_VARS}")));
    }
    check_weight("max size", job.max_size as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(job.seed);
    let points: Vec<Vec<Rat>> = (0..job.points)
        .map(|_| random_point(&mut rng, job.vars))
        .collect();
    let family = job.params.as_deref().map(parse_params).transpose()?;
    let indices = match family {
        Some(_) => compositions(job.max_size as i64),
        None => strict_partitions(job.max_size as i64),
    };
    let mut mismatches = 0;
    let mut compared = 0;
    for index in indices.iter().filter(|v| v.len() <= job.vars) {
        let (fast, label) = match &family {
            Some(fam) => {
                let a = params_for(fam, index)?;
                (multiparam_q(index, &a)?, format!("Q{index:?}^(a)"))
            }
            None => (q_lambda(index), format!("Q{index:?}")),
        };
        let sym = if job.polynomial {
            Some(match &family {
                Some(fam) => qa_sym(index, &params_for(fam, index)?, job.vars)?,
                None => q_lambda_sym(index, job.vars)?,
            })
        } else {
            None
        };
        let mut ok = true;
        for xs in &points {
            let want = match (&sym, &family) {
                (Some(p), _) => p.evaluate(xs),
                (None, Some(fam)) => qa_sym_at(index, &params_for(fam, index)?, xs)?,
                (None, None) => q_lambda_sym_at(index, xs)?,
            };
            ok &= eval_powersums(&fast, xs) == want;
        }
        compared += 1;
        if !ok {
            mismatches += 1;
            println!("MISMATCH {label}");
        }
    }
    let verdict = if mismatches == 0 { "PASS" } else { "FAIL" };
    println!(
        "{verdict}: {compared} functions, {} point sets, N = {}, {mismatches} mismatches",
        points.len(),
        job.vars
    );
    Ok(mismatches == 0)
}
