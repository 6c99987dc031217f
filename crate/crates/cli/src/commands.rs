use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use supdeform_core::axiomlab::{
    check_leibniz, check_superjacobi, check_supersymmetry, solve_f_closed, solve_f_nonclosed,
};
use supdeform_core::brackets::{
    solve_g0_doubleprime, solve_g0_prime, BracketWarning, DeformedBracket, DeformedSchoutenAlgebra,
    DeformedSuperalgebra, FSpec, SuperBracket,
};
use supdeform_core::homology::{betti_piecewise, BoundaryMatrix};
use supdeform_core::scalarfield::format_rational;
use supdeform_core::superchain::max_length;

use crate::config::{ExtensionChoice, OutputFormat, RunConfig};
use crate::report::{
    AxiomJson, AxiomSuiteJson, BettiJson, BoundaryJson, ChainJson, FSpaceJson, LevelJson, ValidateJson,
};
use crate::CliError;

/// Rendered command output and whether the run counts as a success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn emit<T: Serialize>(format: OutputFormat, value: &T, text: impl FnOnce() -> String, ok: bool) -> Outcome {
    let output = match format {
        OutputFormat::Json => to_json(value),
        OutputFormat::Text => text(),
    };
    Outcome { output, ok }
}

/// The Lie superalgebra a config describes: forms, optionally extended by vectors.
pub fn superalgebra(cfg: &RunConfig) -> Result<DeformedSuperalgebra, CliError> {
    let alg = Arc::new(cfg.algebra.clone());
    let bracket = DeformedBracket::new(Arc::clone(&alg), cfg.deformation.clone())?;
    Ok(match cfg.extension {
        ExtensionChoice::None => DeformedSuperalgebra::forms_only(bracket),
        ExtensionChoice::G0Prime => DeformedSuperalgebra::extended(bracket, solve_g0_prime(&alg, &cfg.phi))?,
        ExtensionChoice::G0DoublePrime => {
            DeformedSuperalgebra::extended(bracket, solve_g0_doubleprime(&alg, &cfg.phi))?
        }
    })
}

fn describe_deformation(cfg: &RunConfig) -> String {
    let kind = format!("{:?}", cfg.deformation.kind()).to_lowercase();
    match cfg.deformation.f() {
        FSpec::Kappa(k) => format!("{kind}, F(a,b) = {k}(a+b+2)"),
        FSpec::Constant(c) => format!("{kind}, F = {c}"),
        FSpec::Table(t) => {
            let entries: Vec<String> = t.entries().map(|((a, b), v)| format!("F({a},{b})={v}")).collect();
            format!("{kind}, F table {{{}}}", entries.join(", "))
        }
    }
}

pub fn cmd_validate(cfg: &RunConfig, format: OutputFormat) -> Result<Outcome, CliError> {
    let sa = superalgebra(cfg)?;
    let alg = &cfg.algebra;
    let report = ValidateJson {
        dim: alg.dim(),
        jacobi: alg.validate_jacobi().is_ok(),
        phi: cfg.phi.coeffs().iter().map(format_rational).collect(),
        phi_closed: alg.is_closed(&cfg.phi),
        d_phi: alg.d_one_form(&cfg.phi).render(alg.dual_names()),
        deformation: if cfg.phi.is_zero() {
            format!("{} (phi = 0: undeformed)", describe_deformation(cfg))
        } else {
            describe_deformation(cfg)
        },
        warnings: sa
            .deformed_bracket()
            .warnings()
            .iter()
            .map(|w| match w {
                BracketWarning::NonClosedPhi => "phi is not closed; super Jacobi is expected to fail".to_string(),
                BracketWarning::AsymmetricF(a, b) => format!("F({a},{b}) != F({b},{a})"),
            })
            .collect(),
        extension: cfg.extension.to_string(),
        extension_basis: sa
            .vectors()
            .basis()
            .iter()
            .map(|v| v.iter().map(format_rational).collect())
            .collect(),
        weights: cfg.weights.clone(),
    };
    let text = || {
        let mut s = String::new();
        let _ = writeln!(s, "algebra: dimension {}, Jacobi identity holds", report.dim);
        let _ = writeln!(s, "phi: ({}), d phi = {}", report.phi.join(", "), report.d_phi);
        let _ = writeln!(s, "deformation: {}", report.deformation);
        let gens: Vec<String> = (0..sa.vectors().dim())
            .map(|i| sa.render(&supdeform_core::brackets::Generator::Vector(i)))
            .collect();
        let _ = writeln!(s, "extension: {} [{}]", report.extension, gens.join(", "));
        for w in &report.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    };
    Ok(emit(format, &report, text, true))
}

pub fn cmd_axioms(cfg: &RunConfig, format: OutputFormat) -> Result<Outcome, CliError> {
    let sa = superalgebra(cfg)?;
    let reports = [check_supersymmetry(&sa), check_superjacobi(&sa)];
    let axioms: Vec<AxiomJson> = reports.iter().map(|r| AxiomJson::from_report(&sa, r)).collect();
    let suite = AxiomSuiteJson {
        bracket_id: sa.id(),
        closed_phi: cfg.algebra.is_closed(&cfg.phi),
        passed: axioms.iter().all(|a| a.passed),
        axioms,
    };
    let ok = suite.passed;
    Ok(emit(format, &suite, || axiom_text(&suite), ok))
}

fn axiom_text(suite: &AxiomSuiteJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", suite.bracket_id);
    for a in &suite.axioms {
        let status = if a.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "  {:<15} {status}  ({} checked, {} failed)", a.axiom, a.checked, a.failed);
        if let Some(w) = &a.witness {
            let _ = writeln!(s, "    witness ({}): defect {}", w.elements.join(", "), w.rendered);
        }
    }
    s
}

fn levels_row(levels: &[LevelJson], f: impl Fn(&LevelJson) -> usize) -> String {
    levels.iter().map(|l| format!("{:>4}", f(l))).collect()
}

fn betti_text(reports: &[BettiJson]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(s, "{}  weight {}", r.bracket_id, r.weight);
        if r.lengths.is_empty() {
            let _ = writeln!(s, "  no chains of this weight");
            continue;
        }
        let _ = writeln!(s, "  {:<22}{}", "m", levels_row(&r.generic, |l| l.m));
        let _ = writeln!(s, "  {:<22}{}", "dim", levels_row(&r.generic, |l| l.dim));
        let _ = writeln!(s, "  {:<22}{}", "kernel (generic t)", levels_row(&r.generic, |l| l.kernel));
        let _ = writeln!(s, "  {:<22}{}", "Betti (generic t)", levels_row(&r.generic, |l| l.betti));
        for sp in &r.special {
            let at = match &sp.root {
                Some(root) => format!("t = {root}"),
                None => format!("{} = 0", sp.factor_text),
            };
            let _ = writeln!(s, "  {:<22}{}", format!("kernel ({at})"), levels_row(&sp.levels, |l| l.kernel));
            let _ = writeln!(s, "  {:<22}{}", format!("Betti ({at})"), levels_row(&sp.levels, |l| l.betti));
        }
        let locus: Vec<&str> = r.special.iter().map(|sp| sp.factor_text.as_str()).collect();
        let _ = writeln!(s, "  special locus: {{{}}}", locus.join(", "));
        let _ = writeln!(s, "  Euler characteristic: {}", r.euler_characteristic);
    }
    s
}

pub fn cmd_betti(cfg: &RunConfig, weights: &[i64], format: OutputFormat) -> Result<Outcome, CliError> {
    let sa = superalgebra(cfg)?;
    let reports = weights
        .iter()
        .map(|&w| betti_piecewise(&sa, w).map(|r| BettiJson::from(&r)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(emit(format, &reports, || betti_text(&reports), true))
}

pub fn cmd_chain(cfg: &RunConfig, weights: &[i64], format: OutputFormat) -> Result<Outcome, CliError> {
    let sa = superalgebra(cfg)?;
    let mut dumps = Vec::new();
    for &w in weights {
        let mut top = max_length(&sa, w).map_err(supdeform_core::homology::HomologyError::from)?;
        if let Some(cap) = cfg.max_degree {
            top = top.min(cap);
        }
        let boundaries = (usize::from(w != 0)..=top)
            .map(|m| BoundaryMatrix::build(&sa, m, w).map(|bm| BoundaryJson::from_matrix(&sa, &bm)))
            .collect::<Result<Vec<_>, _>>()?;
        dumps.push(ChainJson {
            bracket_id: sa.id(),
            weight: w,
            boundaries,
        });
    }
    let text = || {
        let mut s = String::new();
        for d in &dumps {
            let _ = writeln!(s, "{}  weight {}", d.bracket_id, d.weight);
            for b in &d.boundaries {
                let _ = writeln!(s, "  C_{} basis: [{}]", b.m, b.cols.join(", "));
                if b.rows.is_empty() {
                    continue;
                }
                let _ = writeln!(s, "  boundary C_{} -> C_{} (generic rank {}):", b.m, b.m - 1, b.generic_rank);
                for (word, row) in b.rows.iter().zip(&b.entries) {
                    let cells: Vec<String> = row.iter().map(|p| poly_text(p)).collect();
                    let _ = writeln!(s, "    {:<20} [{}]", word, cells.join(", "));
                }
            }
        }
        s
    };
    Ok(emit(format, &dumps, text, true))
}

fn poly_text(coeffs: &[String]) -> String {
    use supdeform_core::scalarfield::{parse_rational, Poly};
    let p = Poly::new(coeffs.iter().map(|c| parse_rational(c).expect("formatted rational")).collect());
    p.to_string()
}

pub fn cmd_ffamily(closed: bool, grid: usize, format: OutputFormat) -> Result<Outcome, CliError> {
    let space = if closed { solve_f_closed(grid)? } else { solve_f_nonclosed(grid)? };
    let report = FSpaceJson::from(&space);
    let text = || {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "symmetric F on a+b <= {} ({} conditions): dimension {}",
            report.grid, report.constraints, report.dim
        );
        for (i, (basis, formula)) in report.basis.iter().zip(&report.formulas).enumerate() {
            match formula {
                Some(f) => {
                    let _ = writeln!(s, "  basis {}: F(a,b) = {f}", i + 1);
                }
                None => {
                    let vals: Vec<String> = basis.iter().map(|e| format!("F({},{})={}", e.a, e.b, e.value)).collect();
                    let _ = writeln!(s, "  basis {}: {}", i + 1, vals.join(" "));
                }
            }
        }
        s
    };
    Ok(emit(format, &report, text, true))
}

pub fn cmd_schouten(cfg: &RunConfig, format: OutputFormat) -> Result<Outcome, CliError> {
    let sa = DeformedSchoutenAlgebra::new(Arc::new(cfg.algebra.clone()), cfg.phi.clone())?;
    let reports = [check_supersymmetry(&sa), check_leibniz(&sa)];
    let axioms: Vec<AxiomJson> = reports.iter().map(|r| AxiomJson::from_report(&sa, r)).collect();
    let suite = AxiomSuiteJson {
        bracket_id: sa.id(),
        closed_phi: cfg.algebra.is_closed(&cfg.phi),
        passed: axioms.iter().all(|a| a.passed),
        axioms,
    };
    let ok = suite.passed;
    Ok(emit(format, &suite, || axiom_text(&suite), ok))
}
