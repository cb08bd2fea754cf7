//! Colouring and auditing of one graph.

use std::path::{Path, PathBuf};

use injcolor::discharging::{audit_for_class, AuditError, AuditMode, AuditReport};
use injcolor::exact::{injective_chromatic_number, validate_injective, Outcome};
use injcolor::reduction::{check_hypotheses, color_constructive, EngineError, TheoremClass};
use serde::Serialize;

use crate::{input_error, load, CmdOutput, InputError, EXIT_FAILURE, EXIT_HYPOTHESIS, EXIT_OK, SCHEMA_VERSION};

#[derive(Clone, Debug)]
pub struct ColorOptions {
    pub class: Option<TheoremClass>,
    pub exact: bool,
    pub budget: u64,
    /// Directory for theorem-violation certificates.
    pub certificate_dir: PathBuf,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ColorReport {
    pub schema_version: u32,
    pub n: usize,
    pub delta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<TheoremClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructive: Option<ConstructiveOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactOut>,
    /// Exact optimum within the constructive palette, when both ran.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructiveOut {
    pub palette: usize,
    pub colors_used: usize,
    pub valid: bool,
    pub coloring: Vec<usize>,
    pub kinds: std::collections::BTreeMap<&'static str, usize>,
    pub diagnostics: Vec<String>,
    pub fallback: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactOut {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_i: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
}

pub fn cmd_color(input: &Path, embedding: Option<&PathBuf>, opts: &ColorOptions) -> Result<CmdOutput, InputError> {
    if opts.class.is_none() && !opts.exact {
        return Err(input_error("color needs --class, --exact or both"));
    }
    let (g, emb) = load(input, embedding)?;
    let mut rep = ColorReport { schema_version: SCHEMA_VERSION, n: g.n(), delta: g.max_degree(), ..Default::default() };
    let mut messages = Vec::new();
    let mut exit = EXIT_OK;

    if let Some(class) = opts.class {
        rep.class = Some(class);
        if let Err(e) = check_hypotheses(&g, class, emb.as_ref()) {
            rep.hypotheses = Some(e.to_string());
            let mut out = CmdOutput::new(&rep, EXIT_HYPOTHESIS);
            out.messages.push(format!("hypothesis rejected: {e}"));
            return Ok(out);
        }
        rep.hypotheses = Some("OK".into());
        match color_constructive(&g, class, emb.as_ref()) {
            Ok(c) => {
                let valid = validate_injective(&g, &c.coloring.assignment).is_ok();
                if !valid || c.coloring.palette_size > c.palette {
                    exit = EXIT_FAILURE;
                    messages.push("constructive colouring failed validation".into());
                }
                rep.constructive = Some(ConstructiveOut {
                    palette: c.palette,
                    colors_used: c.coloring.palette_size,
                    valid,
                    coloring: c.coloring.assignment.clone(),
                    kinds: c.kind_counts(),
                    diagnostics: c.diagnostics.iter().map(|d| format!("step {} {}: {}", d.step, d.kind.label(), d.note)).collect(),
                    fallback: c.fallback_used(),
                });
            }
            Err(EngineError::Violation(v)) => {
                std::fs::create_dir_all(&opts.certificate_dir).map_err(|e| input_error(e.to_string()))?;
                let path = opts.certificate_dir.join(format!("violation_{}.edges", class.tag()));
                v.write_to(&path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                messages.push(format!("theorem violation: {v}; certificate {}", path.display()));
                rep.certificate = Some(path.display().to_string());
                exit = EXIT_FAILURE;
            }
            Err(EngineError::Hypothesis(e)) => {
                rep.hypotheses = Some(e.to_string());
                return Ok(CmdOutput::new(&rep, EXIT_HYPOTHESIS));
            }
        }
    }

    if opts.exact {
        rep.exact = Some(match injective_chromatic_number(&g, opts.budget) {
            Outcome::Done(ch) => ExactOut {
                status: "DONE",
                chi_i: Some(ch.value),
                lower: ch.value,
                upper: ch.value,
                nodes: ch.nodes,
                coloring: Some(ch.coloring.assignment),
            },
            Outcome::Aborted(a) => {
                messages.push(format!("exact search aborted after {} nodes", a.nodes));
                ExactOut { status: "ABORTED", chi_i: None, lower: a.lower, upper: a.upper, nodes: a.nodes, coloring: None }
            }
        });
    }

    if let (Some(c), Some(e)) = (&rep.constructive, &rep.exact) {
        if let Some(chi) = e.chi_i {
            let agree = chi <= c.palette && chi <= c.colors_used;
            if !agree {
                exit = EXIT_FAILURE;
                messages.push(format!("exact chi_i = {chi} disagrees with palette {}", c.palette));
            }
            rep.agreement = Some(agree);
        }
    }
    let mut out = CmdOutput::new(&rep, exit);
    out.messages = messages;
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditOut {
    pub schema_version: u32,
    pub class: TheoremClass,
    #[serde(flatten)]
    pub report: AuditReport,
}

pub fn cmd_audit(input: &Path, embedding: Option<&PathBuf>, class: TheoremClass, strict: bool) -> Result<CmdOutput, InputError> {
    let (g, emb) = load(input, embedding)?;
    let mode = if strict { AuditMode::Strict } else { AuditMode::Localized };
    let Some(result) = audit_for_class(class, &g, emb.as_ref(), mode) else {
        return Err(input_error(format!("class {class} has no discharging audit")));
    };
    match result {
        Ok(report) => {
            let exit = if report.passed() { EXIT_OK } else { EXIT_FAILURE };
            let messages =
                report.failures().map(|a| format!("{} failed: {}", a.name, a.witness.as_deref().unwrap_or(""))).collect();
            let mut out = CmdOutput::new(&AuditOut { schema_version: SCHEMA_VERSION, class, report }, exit);
            out.messages = messages;
            Ok(out)
        }
        Err(AuditError::EmbeddingMismatch) => Err(input_error("embedding host differs from the graph")),
        Err(e @ AuditError::Precondition { .. }) => {
            let report = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "class": class,
                "error": e.to_string(),
            });
            Ok(CmdOutput { report, exit: EXIT_HYPOTHESIS, messages: vec![e.to_string()] })
        }
    }
}

