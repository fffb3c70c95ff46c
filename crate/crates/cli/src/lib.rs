//! Command-line plumbing: the model file format, the built-in fixture
//! corpus, and the command dispatcher shared by the binary and the tests.

pub mod corpus;
pub mod model;
pub mod report;
pub mod resolve;

use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use group_kernel::ProbeConfig;
use homotopy_2groupoid::{
    asymmetry_forward_report, asymmetry_reverse_search, concat_homotopies, inverse_pair_report,
    invert_homotopy, morphisms_agree,
};
use lax::{
    asymmetry_lax_report, is_lax_equivalence, kernel_relations_check, lax_concat, lax_invert,
    lax_target, lax_to_strict, lax_twofold_validate, lax_validate, LaxHomotopy, SearchBounds,
};
use path_spaces::path_space;
use xmod_core::{
    homotopy_groups, rnn_suite, verify_two_crossed, xmod_map_verify, TwoCrossedModule,
    VerificationReport, XModMorphism,
};

use crate::model::ModelFile;
use crate::report::Report;
use crate::resolve::{resolve, Cell, Resolved};

/// Global options shared by every command.
#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    /// Word-length bound for probes over free/infinite carriers.
    pub probe_depth: Option<usize>,
    /// Tuple cap before seeded sampling kicks in.
    pub samples: Option<usize>,
    /// Accepted for interface stability; suites are internally deterministic
    /// regardless of the worker count.
    pub jobs: Option<usize>,
    /// Extra model files, searched before the built-in corpus.
    pub files: Vec<ModelFile>,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            seed: group_kernel::DEFAULT_SEED,
            probe_depth: None,
            samples: None,
            jobs: None,
            files: Vec::new(),
        }
    }
}

/// The parsed command surface.
#[derive(Clone, Debug)]
pub enum Command {
    Verify { xmod: String },
    Pi { xmod: String },
    Pathspace { xmod: String },
    Q1 { xmod: String },
    Homotopy { op: String, cells: Vec<String> },
    Twofold { op: String, cells: Vec<String> },
    Lax { op: String, cells: Vec<String> },
    Laws { suite: String, xmod: String },
    Counterexample,
}

fn cfg_for(opts: &Options, file: Option<&ModelFile>) -> ProbeConfig {
    let mut cfg = ProbeConfig::default();
    if let Some(f) = file {
        if let Some(s) = f.seed {
            cfg = cfg.with_seed(s);
        }
        if let Some(b) = f.probe.int_bound {
            cfg.int_bound = b;
        }
        if let Some(w) = f.probe.word_len {
            cfg = cfg.with_word_len(w);
        }
        if let Some(m) = f.probe.max_tuples {
            cfg = cfg.with_max_tuples(m);
        }
    }
    cfg = cfg.with_seed(opts.seed);
    if let Some(d) = opts.probe_depth {
        cfg = cfg.with_word_len(d);
        cfg.int_bound = d as i64 * 2;
    }
    if let Some(s) = opts.samples {
        cfg = cfg.with_max_tuples(s);
    }
    cfg
}

/// Finds the first model (user files first, then the corpus) defining
/// `name`, resolves it, and returns the resolved namespace with the probe
/// configuration in force for that file.
fn locate(opts: &Options, name: &str) -> Result<(Resolved, ProbeConfig)> {
    for f in &opts.files {
        if f.defines(name) {
            return Ok((resolve(f)?, cfg_for(opts, Some(f))));
        }
    }
    for (_, f) in corpus::corpus() {
        if f.defines(name) {
            return Ok((resolve(&f)?, cfg_for(opts, Some(&f))));
        }
    }
    bail!("no loaded model or corpus file defines `{name}`")
}

fn get_xmod(opts: &Options, name: &str) -> Result<(TwoCrossedModule, ProbeConfig)> {
    let (r, cfg) = locate(opts, name)?;
    let xm = r.xmods.get(name).ok_or_else(|| anyhow!("`{name}` is not an xmod"))?;
    Ok((xm.clone(), cfg))
}

fn get_cell(opts: &Options, name: &str) -> Result<(Cell, ProbeConfig)> {
    let (r, cfg) = locate(opts, name)?;
    let c = r.cells.get(name).ok_or_else(|| anyhow!("`{name}` is not a cell"))?;
    Ok((c.clone(), cfg))
}

fn get_lax(opts: &Options, name: &str) -> Result<(LaxHomotopy, ProbeConfig)> {
    match get_cell(opts, name)? {
        (Cell::Lax(lh), cfg) => Ok((lh, cfg)),
        _ => bail!("`{name}` is not a lax cell"),
    }
}

fn morphism_table_notes(report: &mut Report, f: &XModMorphism) {
    if let Ok(gs) = f.source.g.elements() {
        let rendered: Vec<String> = gs
            .iter()
            .map(|g| {
                format!(
                    "{} -> {}",
                    f.source.g.describe_element(g),
                    f.target.g.describe_element(&f.phi.apply(g))
                )
            })
            .collect();
        report.note(format!("base-level table: {}", rendered.join(", ")));
    }
}

/// Executes one command, returning the report. Errors are user mistakes
/// (unknown names, malformed files); check failures are reported, not
/// errored.
pub fn run(cmd: &Command, opts: &Options) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(format!("{cmd:?}"), opts.seed);
    match cmd {
        Command::Verify { xmod } => {
            let (xm, cfg) = get_xmod(opts, xmod)?;
            report.push(verify_two_crossed(&xm, &cfg));
        }
        Command::Pi { xmod } => {
            let (xm, cfg) = get_xmod(opts, xmod)?;
            let mut check = VerificationReport::new(format!("homotopy groups of {xmod}"), cfg.describe());
            match homotopy_groups(&xm) {
                Ok(hg) => {
                    report.note(hg.describe());
                    check.law_outcome("homotopy groups computed", None);
                }
                Err(e) => check.law_outcome("homotopy groups computed", Some(e.to_string())),
            }
            report.push(check);
        }
        Command::Pathspace { xmod } => {
            let (xm, cfg) = get_xmod(opts, xmod)?;
            let p = path_space(&xm);
            report.push(verify_two_crossed(&p.total, &cfg));
            let mut check = VerificationReport::new(format!("path-space bundle over {xmod}"), cfg.describe());
            check.absorb("pr0", xmod_map_verify(&p.pr0, &cfg));
            check.absorb("pr1", xmod_map_verify(&p.pr1, &cfg));
            check.absorb("incl", xmod_map_verify(&p.incl, &cfg));
            let id = XModMorphism::identity(&xm);
            check.law_outcome(
                "pr0 ∘ incl = id",
                (!morphisms_agree(&p.pr0.compose(&p.incl), &id, &cfg)).then(|| "retraction fails".into()),
            );
            check.law_outcome(
                "pr1 ∘ incl = id",
                (!morphisms_agree(&p.pr1.compose(&p.incl), &id, &cfg)).then(|| "retraction fails".into()),
            );
            for (lvl, hom) in [("base", &p.pr0.phi), ("middle", &p.pr0.psi), ("bottom", &p.pr0.mu)] {
                check.law_outcome(
                    &format!("pr0 surjective at the {lvl} level"),
                    (!hom.surjective_on_probe(&cfg)).then(|| "not onto".into()),
                );
            }
            report.push(check);
        }
        Command::Q1 { xmod } => {
            let (xm, cfg) = get_xmod(opts, xmod)?;
            let b = lax::q1(&xm).map_err(|e| anyhow!("{e}"))?;
            report.note(format!("basis size {}", b.basis_elements().len()));
            report.push(b.verify(&cfg));
        }
        Command::Homotopy { op, cells } => match (op.as_str(), cells.as_slice()) {
            ("check", [c]) => {
                let (lh, cfg) = get_lax(opts, c)?;
                let h = lax_to_strict(&lh).map_err(|e| anyhow!("{e}"))?;
                report.push(h.validate(&cfg));
            }
            ("compose", [c1, c2]) => {
                let (lh1, cfg) = get_lax(opts, c1)?;
                let (lh2, _) = get_lax(opts, c2)?;
                let h1 = lax_to_strict(&lh1).map_err(|e| anyhow!("{e}"))?;
                let h2 = lax_to_strict(&lh2).map_err(|e| anyhow!("{e}"))?;
                let h = concat_homotopies(&h1, &h2, &cfg).map_err(|e| anyhow!("{e}"))?;
                morphism_table_notes(&mut report, &h.target);
                report.push(h.validate(&cfg));
            }
            ("invert", [c]) => {
                let (lh, cfg) = get_lax(opts, c)?;
                let h = lax_to_strict(&lh).map_err(|e| anyhow!("{e}"))?;
                let inv = invert_homotopy(&h, &cfg).map_err(|e| anyhow!("{e}"))?;
                report.push(inv.validate(&cfg));
                report.push(inverse_pair_report(&h, &cfg).map_err(|e| anyhow!("{e}"))?);
            }
            _ => bail!("usage: homotopy <check CELL | compose CELL CELL | invert CELL>"),
        },
        Command::Twofold { op, cells } => match (op.as_str(), cells.as_slice()) {
            ("check", [c]) => {
                let (cell, cfg) = get_cell(opts, c)?;
                let Cell::TwoFold(tf) = cell else { bail!("`{c}` is not a twofold cell") };
                report.push(lax_twofold_validate(&tf, &cfg));
            }
            _ => bail!("usage: twofold check CELL"),
        },
        Command::Lax { op, cells } => match (op.as_str(), cells.as_slice()) {
            ("check", [c]) => {
                let (lh, cfg) = get_lax(opts, c)?;
                report.push(lax_validate(&lh, &cfg));
            }
            ("target", [c]) => {
                let (lh, cfg) = get_lax(opts, c)?;
                let t = lax_target(&lh);
                morphism_table_notes(&mut report, &t);
                report.push(xmod_map_verify(&t, &cfg));
            }
            ("compose", [c1, c2]) => {
                let (lh1, cfg) = get_lax(opts, c1)?;
                let (lh2, _) = get_lax(opts, c2)?;
                let out = lax_concat(&lh1, &lh2, &cfg).map_err(|e| anyhow!("{e}"))?;
                report.push(lax_validate(&out, &cfg));
            }
            ("invert", [c]) => {
                let (lh, cfg) = get_lax(opts, c)?;
                let inv = lax_invert(&lh).map_err(|e| anyhow!("{e}"))?;
                report.push(lax_validate(&inv, &cfg));
                let round = lax_concat(&lh, &inv, &cfg).map_err(|e| anyhow!("{e}"))?;
                let trivial = LaxHomotopy::trivial(&lh.base).map_err(|e| anyhow!("{e}"))?;
                let mut check = VerificationReport::new("inverse pair", cfg.describe());
                check.law_outcome(
                    "lh ⊗̂ lh^-1 is the trivial homotopy",
                    (!round.same_as(&trivial, &cfg)).then(|| "round trip is nontrivial".into()),
                );
                report.push(check);
            }
            ("equiv", [c]) => {
                let (cell, cfg) = get_cell(opts, c)?;
                let Cell::Morphism(f) = cell else { bail!("`{c}` is not a morphism cell") };
                report.push(is_lax_equivalence(&f, None, &SearchBounds::default(), &cfg));
            }
            _ => bail!("usage: lax <check|target|invert|equiv CELL | compose CELL CELL>"),
        },
        Command::Laws { suite, xmod } => {
            let (xm, cfg) = get_xmod(opts, xmod)?;
            match suite.as_str() {
                "kernel" => report.push(kernel_relations_check(&xm, &cfg).map_err(|e| anyhow!("{e}"))?),
                "identities" => report.push(rnn_suite(&xm, &cfg)),
                other => bail!("unknown law suite `{other}` (expected kernel|identities)"),
            }
        }
        Command::Counterexample => {
            let cfg = cfg_for(opts, None);
            report.push(asymmetry_forward_report(&cfg).map_err(|e| anyhow!("{e}"))?);
            report.push(asymmetry_reverse_search(100, &cfg).map_err(|e| anyhow!("{e}"))?);
            report.push(asymmetry_lax_report(&cfg).map_err(|e| anyhow!("{e}"))?);
            report.note(
                "reverse homotopy: not found within bounds |s'(1)| <= 100; \
                 analytically forced: 2x = 0 implies x = 0 in the integers, \
                 while landing back would need odd s'(1)",
            );
        }
    }
    report.wall_ms = start.elapsed().as_millis();
    Ok(report)
}
