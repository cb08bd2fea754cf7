//! Corpus runs: generate, re-check hypotheses, colour exactly and
//! constructively, audit, and collect every disagreement as a
//! falsification candidate.

use std::path::PathBuf;
use std::time::Instant;

use injcolor::discharging::{audit_for_class, AuditMode};
use injcolor::exact::{injective_chromatic_number, validate_injective, Outcome};
use injcolor::factory::{corpus_sparse_params, Corpus, Instance};
use injcolor::rational::render;
use injcolor::reduction::{check_hypotheses, color_constructive, EngineError, TheoremClass};
use injcolor::structure::{girth, mad_exact, Girth};
use injcolor::Rational;
use rayon::prelude::*;
use serde::Serialize;

use crate::{input_error, InputError, EXIT_FAILURE, EXIT_OK, SCHEMA_VERSION};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub class: TheoremClass,
    pub seed: u64,
    pub count: usize,
    pub size: usize,
    pub budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Where theorem-violation certificates go.
    pub certificate_dir: PathBuf,
    /// Echoed into the report.
    pub command: Vec<String>,
    /// Generate sparse instances with `mad < bound` instead of the class
    /// bound; must be at most the class bound.
    pub mad_below: Option<Rational>,
    /// Test hook: corrupt the constructive colouring of this instance
    /// before validation.
    pub corrupt_instance: Option<usize>,
}

impl VerifyOptions {
    pub fn new(class: TheoremClass, seed: u64, count: usize, size: usize, budget: u64) -> Self {
        VerifyOptions {
            class,
            seed,
            count,
            size,
            budget,
            jobs: None,
            certificate_dir: std::env::temp_dir().join("injcolor-certificates"),
            command: Vec::new(),
            mad_below: None,
            corrupt_instance: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub class: TheoremClass,
    pub seed: u64,
    pub count: usize,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mad_below: Option<String>,
    pub budget: u64,
    pub results: Vec<InstanceResult>,
    pub summary: Summary,
    pub falsification_candidates: Vec<Candidate>,
}

impl RunReport {
    pub fn exit_code(&self) -> u8 {
        if self.falsification_candidates.is_empty() {
            EXIT_OK
        } else {
            EXIT_FAILURE
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub hypotheses_ok: usize,
    pub hypothesis_rejected: usize,
    pub constructive_ok: usize,
    pub exact_done: usize,
    pub exact_aborted: usize,
    /// Exact runs whose `χ_i` is within the class palette.
    pub exact_within_palette: usize,
    pub audits_run: usize,
    pub audits_passed: usize,
    pub fallback_used: usize,
    pub falsifications: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub index: usize,
    pub provenance: String,
    pub reasons: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub index: usize,
    pub provenance: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub girth: Girth,
    pub mad: String,
    pub palette_target: usize,
    /// `"OK"` or the failed hypothesis.
    pub hypotheses: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructive: Option<ConstructiveResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditResult>,
    /// Exact and constructive results both within the palette; `None` when
    /// the exact solver aborted or the hypotheses failed.
    pub agreement: Option<bool>,
    pub reasons: Vec<String>,
    pub timings_ms: Timings,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactResult {
    /// `"DONE"` or `"ABORTED"`.
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_i: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub nodes: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructiveResult {
    pub ok: bool,
    pub palette: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colors_used: Option<usize>,
    pub valid: bool,
    pub steps: usize,
    pub kinds: std::collections::BTreeMap<&'static str, usize>,
    pub diagnostics: usize,
    pub fallback: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditResult {
    pub audit: &'static str,
    pub passed: bool,
    pub audited_elements: usize,
    pub failures: Vec<String>,
    pub assertions: Vec<injcolor::discharging::Assertion>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub constructive: u128,
    pub exact: u128,
    pub audit: u128,
}

/// Corrupts a colouring by giving some vertex the colour of another vertex
/// at distance two through a common neighbour.
fn corrupt(g: &injcolor::Graph, colors: &mut [usize]) {
    if let Some(w) = g.vertices().find(|&w| g.degree(w) >= 2) {
        let (u, v) = (g.neighbors(w)[0], g.neighbors(w)[1]);
        colors[v] = colors[u];
    }
}

/// Checks one instance. `corrupt_coloring` is the test hook of
/// [`VerifyOptions::corrupt_instance`].
pub fn check_instance(
    index: usize,
    inst: &Instance,
    class: TheoremClass,
    budget: u64,
    corrupt_coloring: bool,
    certificate_dir: &std::path::Path,
) -> (InstanceResult, Option<Candidate>) {
    let g = &inst.graph;
    let delta = g.max_degree();
    let palette = class.palette(delta);
    let mut result = InstanceResult {
        index,
        provenance: inst.provenance.clone(),
        n: g.n(),
        m: g.m(),
        delta,
        girth: girth(g),
        mad: if g.n() == 0 { "0/1".into() } else { render(&mad_exact(g).value) },
        palette_target: palette,
        hypotheses: "OK".into(),
        exact: None,
        constructive: None,
        audit: None,
        agreement: None,
        reasons: Vec::new(),
        timings_ms: Timings::default(),
    };
    let mut certificate = None;

    // generated instances must satisfy the class; a rejection is a generator bug
    if let Err(e) = check_hypotheses(g, class, inst.embedding.as_ref()) {
        result.hypotheses = e.to_string();
        result.reasons.push(format!("hypotheses: {e}"));
        let cand = Candidate { index, provenance: inst.provenance.clone(), reasons: result.reasons.clone(), certificate };
        return (result, Some(cand));
    }

    let t = Instant::now();
    let cons = match color_constructive(g, class, inst.embedding.as_ref()) {
        Ok(c) => {
            let mut colors = c.coloring.assignment.clone();
            if corrupt_coloring {
                corrupt(g, &mut colors);
            }
            let used = injcolor::exact::Coloring::new(colors.clone()).palette_size;
            let valid = match validate_injective(g, &colors) {
                Ok(()) => true,
                Err(e) => {
                    result.reasons.push(format!("constructive colouring invalid: {e}"));
                    false
                }
            };
            if used > palette {
                result.reasons.push(format!("constructive colouring uses {used} colours, palette {palette}"));
            }
            ConstructiveResult {
                ok: valid && used <= palette,
                palette: c.palette,
                colors_used: Some(used),
                valid,
                steps: c.steps.len(),
                kinds: c.kind_counts(),
                diagnostics: c.diagnostics.len(),
                fallback: c.fallback_used(),
                error: None,
            }
        }
        Err(e) => {
            if let EngineError::Violation(v) = &e {
                std::fs::create_dir_all(certificate_dir).ok();
                let path = certificate_dir.join(format!("violation_{}_{index:04}.edges", class.tag()));
                if v.write_to(&path).is_ok() {
                    certificate = Some(path.display().to_string());
                }
            }
            result.reasons.push(format!("constructive: {e}"));
            ConstructiveResult {
                ok: false,
                palette,
                colors_used: None,
                valid: false,
                steps: 0,
                kinds: Default::default(),
                diagnostics: 0,
                fallback: false,
                error: Some(e.to_string()),
            }
        }
    };
    result.timings_ms.constructive = t.elapsed().as_millis();

    let t = Instant::now();
    let exact = match injective_chromatic_number(g, budget) {
        Outcome::Done(ch) => {
            if ch.value > palette {
                result.reasons.push(format!("exact chi_i = {} exceeds palette {palette}", ch.value));
            }
            ExactResult { status: "DONE", chi_i: Some(ch.value), lower: ch.value, upper: ch.value, nodes: ch.nodes }
        }
        Outcome::Aborted(a) => {
            if a.lower > palette {
                result.reasons.push(format!("exact lower bound {} exceeds palette {palette}", a.lower));
            }
            ExactResult { status: "ABORTED", chi_i: None, lower: a.lower, upper: a.upper, nodes: a.nodes }
        }
    };
    result.timings_ms.exact = t.elapsed().as_millis();
    result.agreement = exact.chi_i.map(|chi| chi <= palette && cons.ok && cons.colors_used.is_some_and(|u| u >= chi));

    let t = Instant::now();
    result.audit = audit_for_class(class, g, inst.embedding.as_ref(), AuditMode::Localized).map(|r| match r {
        Ok(rep) => {
            let failures: Vec<String> = rep
                .failures()
                .map(|a| format!("{}: {}", a.name, a.witness.clone().unwrap_or_default()))
                .collect();
            result.reasons.extend(failures.iter().map(|f| format!("audit {f}")));
            AuditResult {
                audit: rep.audit,
                passed: rep.passed(),
                audited_elements: rep.audited_elements,
                failures,
                assertions: rep.assertions,
                notes: rep.notes,
            }
        }
        Err(e) => {
            result.reasons.push(format!("audit: {e}"));
            AuditResult {
                audit: injcolor::discharging::audit_name(class).unwrap_or("none"),
                passed: false,
                audited_elements: 0,
                failures: vec![e.to_string()],
                assertions: Vec::new(),
                notes: Vec::new(),
            }
        }
    });
    result.timings_ms.audit = t.elapsed().as_millis();

    result.exact = Some(exact);
    result.constructive = Some(cons);
    let cand = (!result.reasons.is_empty()).then(|| Candidate {
        index,
        provenance: inst.provenance.clone(),
        reasons: result.reasons.clone(),
        certificate,
    });
    (result, cand)
}

fn tally(results: &[InstanceResult]) -> Summary {
    let mut s = Summary { instances: results.len(), ..Summary::default() };
    for r in results {
        if r.hypotheses == "OK" {
            s.hypotheses_ok += 1;
        } else {
            s.hypothesis_rejected += 1;
        }
        if let Some(c) = &r.constructive {
            s.constructive_ok += c.ok as usize;
            s.fallback_used += c.fallback as usize;
        }
        if let Some(e) = &r.exact {
            match e.chi_i {
                Some(chi) => {
                    s.exact_done += 1;
                    s.exact_within_palette += (chi <= r.palette_target) as usize;
                }
                None => s.exact_aborted += 1,
            }
        }
        if let Some(a) = &r.audit {
            s.audits_run += 1;
            s.audits_passed += a.passed as usize;
        }
        s.falsifications += !r.reasons.is_empty() as usize;
    }
    s
}

/// Runs a verification campaign. Results follow instance order whatever
/// the number of jobs.
pub fn verify(opts: &VerifyOptions) -> Result<RunReport, InputError> {
    let corpus = match &opts.mad_below {
        None => Corpus::generate(opts.class, opts.seed, opts.count, opts.size),
        Some(bound) => {
            let mut p = corpus_sparse_params(opts.class, opts.size)
                .ok_or_else(|| input_error(format!("--mad-below needs a sparse class, not {}", opts.class)))?;
            if *bound > p.mad_bound {
                return Err(input_error(format!("mad bound {} exceeds the class bound {}", render(bound), render(&p.mad_bound))));
            }
            p.mad_bound = bound.clone();
            p.strict = true;
            Corpus::generate_sparse(opts.class, &p, opts.seed, opts.count)
        }
    }
    .map_err(|e| input_error(e.to_string()))?;
    let run = || -> Vec<(InstanceResult, Option<Candidate>)> {
        corpus
            .instances
            .par_iter()
            .enumerate()
            .map(|(i, inst)| {
                check_instance(
                    i,
                    inst,
                    opts.class,
                    opts.budget,
                    opts.corrupt_instance == Some(i),
                    &opts.certificate_dir,
                )
            })
            .collect()
    };
    let checked = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| input_error(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let (results, candidates): (Vec<_>, Vec<_>) = checked.into_iter().unzip();
    let summary = tally(&results);
    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        command: opts.command.clone(),
        class: opts.class,
        seed: opts.seed,
        count: opts.count,
        size: opts.size,
        mad_below: opts.mad_below.as_ref().map(render),
        budget: opts.budget,
        results,
        summary,
        falsification_candidates: candidates.into_iter().flatten().collect(),
    })
}
