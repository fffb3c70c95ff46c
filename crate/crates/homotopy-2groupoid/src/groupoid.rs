//! Assembling homotopies and 2-derivations into a 2-groupoid and checking
//! its laws over enumerated cells.

use group_kernel::ProbeConfig;
use xmod_core::{VerificationReport, XModMorphism};

use crate::concat::{concat_homotopies, invert_homotopy};
use crate::derivation::Homotopy;
use crate::error::{HomotopyError, Result};
use crate::twofold::{invert_twofold, vertical_compose, Quadratic2Derivation};
use crate::util::morphisms_agree;
use crate::whisker::interchange_check;

/// A 1-cell with explicit object endpoints (indices into the object list).
pub struct Cell1 {
    /// Index of the source object.
    pub src: usize,
    /// Index of the target object.
    pub tgt: usize,
    /// The homotopy.
    pub hom: Homotopy,
}

/// A 2-cell with explicit 1-cell endpoints (indices into the 1-cell list).
pub struct Cell2 {
    /// Index of the source 1-cell.
    pub src: usize,
    /// Index of the target 1-cell.
    pub tgt: usize,
    /// The 2-derivation.
    pub cell: Quadratic2Derivation,
}

/// A 2-groupoid presented by explicit cell lists.
pub struct Hom2Groupoid {
    /// Objects: morphisms between the two fixed modules.
    pub objects: Vec<XModMorphism>,
    /// 1-cells: homotopies.
    pub cells1: Vec<Cell1>,
    /// 2-cells: quadratic 2-derivations.
    pub cells2: Vec<Cell2>,
}

/// Deterministic sampling: at most `cap` evenly spaced items.
fn sample<T>(items: Vec<T>, cap: usize) -> Vec<T> {
    if items.len() <= cap || cap == 0 {
        return items;
    }
    let step = items.len().div_ceil(cap);
    items.into_iter().step_by(step).collect()
}

/// Bundles cell lists after consistency checks: every endpoint index must
/// exist and agree (on probe sets) with the stated endpoint.
pub fn build_hom2groupoid(
    objects: Vec<XModMorphism>,
    cells1: Vec<Cell1>,
    cells2: Vec<Cell2>,
    cfg: &ProbeConfig,
) -> Result<Hom2Groupoid> {
    for (i, c) in cells1.iter().enumerate() {
        if c.src >= objects.len() || c.tgt >= objects.len() {
            return Err(HomotopyError::ShapeMismatch(format!("1-cell {i} has out-of-range endpoints")));
        }
        if !morphisms_agree(&c.hom.base, &objects[c.src], cfg)
            || !morphisms_agree(&c.hom.target, &objects[c.tgt], cfg)
        {
            return Err(HomotopyError::EndpointMismatch(format!("1-cell {i} endpoints disagree")));
        }
    }
    for (i, c) in cells2.iter().enumerate() {
        if c.src >= cells1.len() || c.tgt >= cells1.len() {
            return Err(HomotopyError::ShapeMismatch(format!("2-cell {i} has out-of-range endpoints")));
        }
        if !c.cell.base.agrees_with(&cells1[c.src].hom, cfg)
            || !c.cell.target.agrees_with(&cells1[c.tgt].hom, cfg)
        {
            return Err(HomotopyError::EndpointMismatch(format!("2-cell {i} endpoints disagree")));
        }
    }
    Ok(Hom2Groupoid { objects, cells1, cells2 })
}

impl Hom2Groupoid {
    /// Checks the 2-groupoid laws over the supplied cells: units,
    /// associativity and inverses of concatenation, the vertical category
    /// structure, and interchange across horizontally composable 2-cells.
    /// Composable tuples beyond `cfg.max_tuples` are sampled
    /// deterministically.
    pub fn verify_laws(&self, cfg: &ProbeConfig) -> VerificationReport {
        let mut report = VerificationReport::new("2-groupoid laws", cfg.describe());
        let cap = cfg.max_tuples.max(1);

        // Unit and inverse laws for 1-cells.
        let singles = sample((0..self.cells1.len()).collect(), cap);
        report.law("unit and inverse laws for concatenation", singles, |&i| {
            let c = &self.cells1[i];
            let run = || -> Result<Option<String>> {
                let unit_l = Homotopy::unit(&self.objects[c.src])?;
                let unit_r = Homotopy::unit(&self.objects[c.tgt])?;
                if !concat_homotopies(&unit_l, &c.hom, cfg)?.agrees_with(&c.hom, cfg) {
                    return Ok(Some(format!("left unit fails at 1-cell {i}")));
                }
                if !concat_homotopies(&c.hom, &unit_r, cfg)?.agrees_with(&c.hom, cfg) {
                    return Ok(Some(format!("right unit fails at 1-cell {i}")));
                }
                let inv = invert_homotopy(&c.hom, cfg)?;
                if !concat_homotopies(&c.hom, &inv, cfg)?.agrees_with(&unit_l, cfg) {
                    return Ok(Some(format!("right inverse fails at 1-cell {i}")));
                }
                if !concat_homotopies(&inv, &c.hom, cfg)?.agrees_with(&unit_r, cfg) {
                    return Ok(Some(format!("left inverse fails at 1-cell {i}")));
                }
                Ok(None)
            };
            run().unwrap_or_else(|e| Some(format!("1-cell {i}: {e}")))
        });

        // Associativity over composable triples.
        let mut triples = Vec::new();
        'outer: for (i, a) in self.cells1.iter().enumerate() {
            for (j, b) in self.cells1.iter().enumerate() {
                if a.tgt != b.src {
                    continue;
                }
                for (k, c) in self.cells1.iter().enumerate() {
                    if b.tgt != c.src {
                        continue;
                    }
                    triples.push((i, j, k));
                    if triples.len() >= 4 * cap {
                        break 'outer;
                    }
                }
            }
        }
        report.law("associativity of concatenation", sample(triples, cap), |&(i, j, k)| {
            let run = || -> Result<Option<String>> {
                let a = &self.cells1[i].hom;
                let b = &self.cells1[j].hom;
                let c = &self.cells1[k].hom;
                let left = concat_homotopies(&concat_homotopies(a, b, cfg)?, c, cfg)?;
                let right = concat_homotopies(a, &concat_homotopies(b, c, cfg)?, cfg)?;
                Ok((!left.agrees_with(&right, cfg))
                    .then(|| format!("1-cells ({i}, {j}, {k})")))
            };
            run().unwrap_or_else(|e| Some(format!("1-cells ({i}, {j}, {k}): {e}")))
        });

        // Vertical category structure on 2-cells.
        let singles2 = sample((0..self.cells2.len()).collect(), cap);
        report.law("vertical units and inverses", singles2, |&i| {
            let c = &self.cells2[i].cell;
            let run = || -> Result<Option<String>> {
                let unit = Quadratic2Derivation::unit(&c.base)?;
                if !vertical_compose(&unit, c, cfg)?.agrees_with(c, cfg) {
                    return Ok(Some(format!("left vertical unit fails at 2-cell {i}")));
                }
                let unit_t = Quadratic2Derivation::unit(&c.target)?;
                if !vertical_compose(c, &unit_t, cfg)?.agrees_with(c, cfg) {
                    return Ok(Some(format!("right vertical unit fails at 2-cell {i}")));
                }
                let inv = invert_twofold(c)?;
                if !vertical_compose(c, &inv, cfg)?.agrees_with(&unit, cfg) {
                    return Ok(Some(format!("vertical inverse fails at 2-cell {i}")));
                }
                Ok(None)
            };
            run().unwrap_or_else(|e| Some(format!("2-cell {i}: {e}")))
        });

        // Vertical associativity over composable pairs built from a cell and
        // a deformation of its target.
        let mut vpairs = Vec::new();
        for (i, a) in self.cells2.iter().enumerate() {
            for (j, b) in self.cells2.iter().enumerate() {
                if a.tgt == b.src {
                    vpairs.push((i, j));
                }
            }
        }
        report.law("vertical associativity (with inverses as the third)", sample(vpairs, cap), |&(i, j)| {
            let run = || -> Result<Option<String>> {
                let a = &self.cells2[i].cell;
                let b = &self.cells2[j].cell;
                let c = invert_twofold(b)?;
                let left = vertical_compose(&vertical_compose(a, b, cfg)?, &c, cfg)?;
                let right = vertical_compose(a, &vertical_compose(b, &c, cfg)?, cfg)?;
                Ok((!left.agrees_with(&right, cfg)).then(|| format!("2-cells ({i}, {j})")))
            };
            run().unwrap_or_else(|e| Some(format!("2-cells ({i}, {j}): {e}")))
        });

        // Interchange over horizontally composable pairs.
        let mut hpairs = Vec::new();
        for (i, a) in self.cells2.iter().enumerate() {
            for (j, b) in self.cells2.iter().enumerate() {
                if self.cells1[a.src].tgt == self.cells1[b.src].src {
                    hpairs.push((i, j));
                }
            }
        }
        report.law("interchange", sample(hpairs, cap), |&(i, j)| {
            match interchange_check(&self.cells2[i].cell, &self.cells2[j].cell, cfg) {
                Ok(r) if r.passed() => None,
                Ok(r) => Some(format!("2-cells ({i}, {j}): {}", r.summary())),
                Err(e) => Some(format!("2-cells ({i}, {j}): {e}")),
            }
        });

        report
    }
}
