use std::path::Path;

use serde_json::Value;

use acaa_core::algebra::{
    check_acaa, check_acaa_admissible, check_antiassociative, check_anticommutative,
    check_cyclic_triple, check_jacobi, check_quadratic_identity, check_rho_associative,
    fingerprint, QuadIdentityCoeffs,
};
use acaa_core::catalog::{self, recognize};
use acaa_core::cohomology::{check_cochain, run_check, CochainFile, CohomologyCheck, GradedAcaa};
use acaa_core::enumerate::{default_jobs, enumerate_finite_with_jobs};
use acaa_core::free::{free_acaa, graded_dims, normal_form, BracketWord};
use acaa_core::operad::{acaa_dims, dual_dims, dual_relations_force_nilpotency, MonomialSpace};
use acaa_core::repr::{
    ad_matrix, check_ad_identities, check_representation, check_weighted_antiderivation,
    h3_faithfulness_search, is_faithful, Representation, RepresentationFile, SearchOutcome,
};
use acaa_core::sampling::Sampler;
use acaa_core::series::{
    acaa_series, dual_series, koszul_residual, InverseConvention, KoszulRoles,
};
use acaa_core::{linalg::span, Algebra, FieldSpec, Matrix, Scalar, Verdict, Witness};
use clap::ValueEnum;

use crate::args::{CheckKind, Command, Convention, Global, Identity, OperadAction, SeriesAction};
use crate::input::{
    free_degrees, parse_json, parse_scalars, parse_usizes, read_file, resolve_algebra, CliResult,
    InputError,
};
use crate::report::{CommandReport, Status, WitnessReport};

/// What a command produced: the report, plus a file body for commands whose
/// `--out` target is an artifact rather than the report.
pub struct Output {
    pub report: CommandReport,
    pub artifact: Option<String>,
}

impl From<CommandReport> for Output {
    fn from(report: CommandReport) -> Self {
        Output {
            report,
            artifact: None,
        }
    }
}

/// `3*X123 - X12 + 1/2*e1`, or `0`.
pub fn vector_text(alg: &Algebra, coords: &[Scalar]) -> String {
    let mut out = String::new();
    for (k, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let text = c.to_string();
        let (neg, abs) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        out.push_str(match (out.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        if abs != "1" {
            out.push_str(&abs);
            out.push('*');
        }
        out.push_str(&alg.label(k));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn witness_report(alg: &Algebra, w: &Witness) -> WitnessReport {
    let residual = if w.residual.len() == alg.dim() {
        vector_text(alg, &w.residual)
    } else {
        format!(
            "[{}]",
            w.residual
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )
    };
    WitnessReport {
        indices: w.indices.clone(),
        labels: w.labels(alg),
        residual: Some(residual),
    }
}

fn verdict_report(command: &str, alg: &Algebra, verdict: &Verdict) -> CommandReport {
    match verdict.witness() {
        None => CommandReport::new(command, Status::Holds),
        Some(w) => CommandReport::failing(command, witness_report(alg, w)),
    }
}

fn describe(report: CommandReport, alg: &Algebra) -> CommandReport {
    let report = match alg.name() {
        Some(n) => report.with("algebra", n),
        None => report,
    };
    report
        .with("dim", alg.dim())
        .with("field", alg.field().to_string())
}

fn matrix_json(m: &Matrix) -> Value {
    m.row_vectors()
        .iter()
        .map(|r| Value::from(r.iter().map(ToString::to_string).collect::<Vec<_>>()))
        .collect()
}

fn jobs(global: &Global) -> usize {
    global.jobs.unwrap_or_else(default_jobs).max(1)
}

pub fn run(command: &Command, global: &Global) -> CliResult<Output> {
    match command {
        Command::Check {
            identity,
            coeffs,
            algebra,
        } => check(*identity, coeffs.as_deref(), algebra).map(Into::into),
        Command::Free { generators, word } => free(*generators, word.as_deref()),
        Command::Fingerprint { algebra } => {
            let a = resolve_algebra(algebra, None)?;
            let fp = fingerprint(&a);
            let r = CommandReport::new("fingerprint", Status::Value)
                .with("fingerprint", fp.to_string())
                .with("derived_dim", fp.derived_dim)
                .with("ann_dim", fp.ann_dim)
                .with("cube_dim", fp.cube_dim);
            Ok(describe(r, &a).into())
        }
        Command::Recognize { algebra } => {
            let a = resolve_algebra(algebra, None)?;
            let r = CommandReport::new("recognize", Status::Value)
                .with("recognized", recognize(&a)?.to_string())
                .with("fingerprint", fingerprint(&a).to_string());
            Ok(describe(r, &a).into())
        }
        Command::Enumerate { dim, p } => {
            let s = enumerate_finite_with_jobs(*dim, *p, jobs(global))?;
            let r = CommandReport::new("enumerate", Status::Value)
                .with("dim", s.dim)
                .with("p", s.p)
                .with("candidates", s.candidates)
                .with("acaa_count", s.acaa_count)
                .with("iso_classes", s.iso_classes)
                .with("orbit_sizes", s.orbit_sizes);
            Ok(r.into())
        }
        Command::Ad { algebra, element } => ad(algebra, element.as_deref(), global).map(Into::into),
        Command::RepCheck {
            file,
            adjoint,
            h3_search,
            p,
            dim,
        } => if *h3_search {
            search(*p, *dim, global)
        } else if let Some(a) = adjoint {
            let a = resolve_algebra(a, None)?;
            rep_report(&Representation::adjoint(&a))
        } else if let Some(path) = file {
            rep_file(path)
        } else {
            Err(InputError(
                "rep-check needs a representation file, --adjoint or --h3-search".into(),
            ))
        }
        .map(Into::into),
        Command::Cohomology {
            check,
            algebra,
            cochain,
            degrees,
        } => cohomology(
            *check,
            algebra,
            cochain.as_deref(),
            degrees.as_deref(),
            global,
        )
        .map(Into::into),
        Command::Series { action } => series(action).map(Into::into),
        Command::Operad { action } => operad(action).map(Into::into),
        Command::Catalog { dim } => list_catalog(*dim).map(Into::into),
    }
}

fn check(identity: Identity, coeffs: Option<&str>, algebra: &str) -> CliResult<CommandReport> {
    let a = resolve_algebra(algebra, None)?;
    let field = a.field();
    if coeffs.is_some() && identity != Identity::Custom {
        return Err(InputError(
            "--coeffs only applies to --identity custom".into(),
        ));
    }
    let verdict = match identity {
        Identity::Anticommutative => check_anticommutative(&a),
        Identity::Acaa => check_acaa(&a)?,
        Identity::CyclicTriple => check_cyclic_triple(&a),
        Identity::Jacobi => check_jacobi(&a),
        Identity::Antiassociative => check_antiassociative(&a),
        Identity::LieAdmissible => {
            check_quadratic_identity(&a, &QuadIdentityCoeffs::lie_admissible(field))?
        }
        Identity::AcaaAdmissible => check_acaa_admissible(&a),
        Identity::RhoAssociative => check_rho_associative(&a),
        Identity::Custom => {
            let text =
                coeffs.ok_or_else(|| InputError("--identity custom needs --coeffs".into()))?;
            let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
            check_quadratic_identity(&a, &QuadIdentityCoeffs::parse(field, &text)?)?
        }
    };
    let name = format!("{identity:?}").to_lowercase();
    Ok(describe(
        verdict_report("check", &a, &verdict).with("identity", name),
        &a,
    ))
}

fn free(n: usize, word: Option<&str>) -> CliResult<Output> {
    let f = free_acaa(n)?;
    let a = f.algebra();
    let mut report = CommandReport::new("free", Status::Value)
        .with("generators", n)
        .with("graded_dims", graded_dims(n))
        .with(
            "basis",
            (0..a.dim()).map(|i| a.label(i)).collect::<Vec<_>>(),
        );
    if let Some(text) = word {
        let w = BracketWord::parse(text)?;
        let nf = normal_form(&f, &w)?;
        report = report
            .with("word", w.to_string())
            .with("normal_form", nf.display(&f));
    }
    Ok(Output {
        report: describe(report, a),
        artifact: Some(a.to_json()),
    })
}

fn ad(algebra: &str, element: Option<&str>, global: &Global) -> CliResult<CommandReport> {
    let a = resolve_algebra(algebra, None)?;
    if let Some(text) = element {
        let x = a.element(parse_scalars(a.field(), text)?)?;
        let m = ad_matrix(&a, &x)?;
        let r = CommandReport::new("ad", Status::Value)
            .with("element", vector_text(&a, x.coords()))
            .with("matrix", matrix_json(&m));
        return Ok(describe(r, &a));
    }
    let basis = check_ad_identities(&a)?;
    if !basis.holds() {
        return Ok(describe(verdict_report("ad", &a, &basis), &a));
    }
    let mut sampler = Sampler::new(global.seed);
    for s in 0..global.samples {
        let x = sampler.element(&a);
        let m = ad_matrix(&a, &x)?;
        let v = check_weighted_antiderivation(&a, &m, 2)?;
        let square = m.mul(&m)?;
        if !v.holds() || !square.is_zero() {
            let mut r = match v.witness() {
                Some(w) => CommandReport::failing("ad", witness_report(&a, w)),
                None => CommandReport::failing(
                    "ad",
                    WitnessReport {
                        indices: vec![],
                        labels: vec![],
                        residual: Some("(ad x)^2 != 0".into()),
                    },
                ),
            };
            r = r
                .with("sample", s)
                .with("element", vector_text(&a, x.coords()));
            return Ok(describe(r, &a));
        }
    }
    let r = CommandReport::new("ad", Status::Holds).with("samples", global.samples);
    Ok(describe(r, &a))
}

fn rep_report(rep: &Representation) -> CliResult<CommandReport> {
    let a = rep.source();
    let v = check_representation(rep)?;
    let mut r = verdict_report("rep-check", a, &v).with("target_dim", rep.target_dim());
    if v.holds() {
        r = r.with("faithful", is_faithful(rep)?);
    }
    Ok(describe(r, a))
}

fn rep_file(path: &Path) -> CliResult<CommandReport> {
    let text = read_file(path)?;
    let file: RepresentationFile = parse_json(path, &text)?;
    let base = path.parent();
    let source = match &file.source {
        Value::String(s) => resolve_algebra(s, base)?,
        v @ Value::Object(_) => {
            let f: acaa_core::algebra::AlgebraFile = serde_json::from_value(v.clone())
                .map_err(|e| InputError(format!("{}: source: {e}", path.display())))?;
            f.to_algebra()?
        }
        _ => {
            return Err(InputError(format!(
                "{}: source must be a name, a path or an algebra",
                path.display()
            )))
        }
    };
    let rep = file
        .to_representation(source)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    rep_report(&rep)
}

fn search(p: u64, dim: usize, global: &Global) -> CliResult<CommandReport> {
    Ok(match h3_faithfulness_search(p, dim, jobs(global))? {
        SearchOutcome::Exhausted { square_zero, pairs } => {
            CommandReport::new("rep-check", Status::Holds)
                .with("search", "h3")
                .with("p", p)
                .with("dim", dim)
                .with("square_zero", square_zero)
                .with("pairs", pairs)
                .with(
                    "conclusion",
                    "XY = 0 for every admissible pair; no faithful representation",
                )
        }
        SearchOutcome::Counterexample { x, y } => {
            let fmt = |m: &[u32]| format!("{m:?}");
            CommandReport::failing(
                "rep-check",
                WitnessReport {
                    indices: vec![],
                    labels: vec![format!("X={}", fmt(&x)), format!("Y={}", fmt(&y))],
                    residual: None,
                },
            )
            .with("search", "h3")
            .with("p", p)
            .with("dim", dim)
        }
    })
}

fn cohomology(
    kind: CheckKind,
    algebra: &str,
    cochain: Option<&Path>,
    degrees: Option<&str>,
    global: &Global,
) -> CliResult<CommandReport> {
    let a = resolve_algebra(algebra, None)?;
    let check = match kind {
        CheckKind::D2d1 => CohomologyCheck::D2D1,
        CheckKind::Cyclic => CohomologyCheck::Cyclic,
        CheckKind::D3d2 => CohomologyCheck::D3D2,
        CheckKind::Gmap => CohomologyCheck::GMap,
    };
    let report = if check == CohomologyCheck::GMap {
        let degrees = match degrees {
            Some(text) => parse_usizes(text)?,
            None => free_degrees(&a)
                .ok_or_else(|| InputError("gmap needs --degrees for a non-free algebra".into()))?,
        };
        let g = GradedAcaa::new(a.clone(), degrees)?;
        run_check(&a, Some(&g), check, 0, global.seed)?
    } else if let Some(path) = cochain {
        let text = read_file(path)?;
        let file: CochainFile = parse_json(path, &text)?;
        let c = file
            .to_cochain()
            .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        check_cochain(&a, check, &c)?
    } else {
        run_check(&a, None, check, global.samples, global.seed)?
    };
    let name = format!("{kind:?}").to_lowercase();
    let mut r = if check == CohomologyCheck::D3D2 {
        CommandReport::new("cohomology", Status::Value)
            .with("residual_support", report.residual_support.clone())
    } else {
        match &report.first_failure {
            None => CommandReport::new("cohomology", Status::Holds),
            Some((sample, idx)) => CommandReport::failing(
                "cohomology",
                WitnessReport {
                    indices: idx.clone(),
                    labels: idx.iter().map(|&i| a.label(i)).collect(),
                    residual: None,
                },
            )
            .with("first_failing_sample", *sample),
        }
    };
    r = r
        .with("check", name)
        .with("samples", report.samples)
        .with("failures", report.failures);
    Ok(describe(r, &a))
}

fn series(action: &SeriesAction) -> CliResult<CommandReport> {
    match action {
        SeriesAction::Inverse { order, convention } => {
            let conv = match convention {
                Convention::Direct => InverseConvention::Direct,
                Convention::NegatedArgument => InverseConvention::NegatedArgument,
            };
            let u = acaa_series(*order).compositional_inverse(conv)?;
            Ok(CommandReport::new("series", Status::Value)
                .with("coeffs", u.coeff_strings())
                .with("series", u.to_string())
                .with(
                    "convention",
                    convention
                        .to_possible_value()
                        .expect("visible variant")
                        .get_name()
                        .to_string(),
                ))
        }
        SeriesAction::Koszul { order, swap_roles } => {
            let roles = if *swap_roles {
                KoszulRoles::Swapped
            } else {
                KoszulRoles::Standard
            };
            let r = koszul_residual(&acaa_series(*order), &dual_series(*order), *order, roles);
            let composite = if *swap_roles {
                "g(-g_dual(-t)) - t"
            } else {
                "g_dual(-g(-t)) - t"
            };
            Ok(CommandReport::new("series", Status::Value)
                .with("coeffs", r.coeff_strings())
                .with("series", r.to_string())
                .with("residual", composite)
                .with("nonzero", !r.is_zero()))
        }
    }
}

fn operad(action: &OperadAction) -> CliResult<CommandReport> {
    match action {
        OperadAction::Dims { order } => Ok(CommandReport::new("operad", Status::Value)
            .with("acaa_dims", acaa_dims(*order))
            .with("dual_dims", dual_dims(*order))
            .with("acaa_series", acaa_series(*order).to_string())
            .with("dual_series", dual_series(*order).to_string())),
        OperadAction::DualCheck { p } => {
            let field = match p {
                Some(p) => FieldSpec::prime(*p)?,
                None => FieldSpec::Rationals,
            };
            let r = dual_relations_force_nilpotency(field);
            let space = MonomialSpace::Skew3;
            let mut report = if r.forces_nilpotency {
                CommandReport::new("operad", Status::Holds)
            } else {
                // A monomial outside the span of the relations survives.
                let rows = r
                    .relation_matrix
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| field.parse(s))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let rel = span(field, rows, 3)?;
                let k = (0..3)
                    .find(|&k| {
                        let mut e = vec![field.zero(); 3];
                        e[k] = field.one();
                        !rel.contains(&e).unwrap_or(true)
                    })
                    .unwrap_or(0);
                CommandReport::failing(
                    "operad",
                    WitnessReport {
                        indices: vec![k],
                        labels: vec![space.labels()[k].clone()],
                        residual: None,
                    },
                )
            };
            report = report
                .with("field", r.field)
                .with("relation_matrix", r.relation_matrix)
                .with("rank", r.rank)
                .with("forces_nilpotency", r.forces_nilpotency);
            Ok(report)
        }
    }
}

fn list_catalog(dim: Option<usize>) -> CliResult<CommandReport> {
    let entries = match dim {
        Some(d @ 2..=5) => catalog::catalog(d)?,
        Some(d) => catalog::extra_entries()
            .into_iter()
            .filter(|e| e.algebra.dim() == d)
            .collect(),
        None => catalog::all_entries(),
    };
    let lines: Vec<String> = entries
        .iter()
        .map(|e| format!("{} {} {}", e.name, e.fingerprint, e.reference))
        .collect();
    Ok(CommandReport::new("catalog", Status::Value).with("entries", lines))
}
