//! The line-oriented model file format.
//!
//! A model file is a sequence of named sections. Blank lines and `#`
//! comments are ignored. Header lines (outside any section) set the seed and
//! probe bounds:
//!
//! ```text
//! seed 42
//! probe int-bound 8 word-len 3 max-tuples 5000
//! ```
//!
//! Sections open with a bracketed heading and hold one construction rule
//! plus optional data lines:
//!
//! ```text
//! [group S3]            [map d : A3 -> S3]      [action c : G on E]
//! perm 3                inclusion               conjugation
//! gen 120
//! gen 102
//!
//! [lift br : S3 -> A3]  [xmod D]                [cell f]
//! commutator            delta d                 morphism C2 D
//!                       bdry b                  mu m0
//!                       act_e ae                psi m1
//!                       act_l al                phi m2
//!                       lift br
//! ```
//!
//! Group rules: `trivial`, `cyclic N`, `integers`, `free SYM...`,
//! `perm DEGREE` (+ `gen` lines in one-line notation), `subgroup PARENT`
//! (+ `elem NAME` lines). Map rules: `identity`, `trivial`, `inclusion`,
//! `double`, `mod N`, `table` (+ `pair X Y` lines). Action rules:
//! `trivial`, `conjugation`, `negation`, `table` (+ `row G X Y` lines).
//! Lift rules: `trivial`, `commutator`, `parity`, `table`
//! (+ `row A B L` lines). An xmod is either assembled from named maps (the
//! carriers are inferred from the map endpoints) or is `q1-of OTHER`. Cells
//! are `morphism SRC TGT` (+ `mu/psi/phi` lines), `lax BASECELL`
//! (+ `s G E`, `t E L`, `pi G H L` lines), or `twofold LAXCELL`
//! (+ `k G L` lines).

use std::fmt;

/// A parse failure with its position.
#[derive(Debug, Clone)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 1-based column of the offending token.
    pub col: usize,
    /// What went wrong.
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDef {
    Trivial,
    Cyclic(i64),
    Integers,
    Free(Vec<String>),
    Perm { degree: usize, gens: Vec<Vec<usize>> },
    Subgroup { parent: String, elems: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapRule {
    Identity,
    Trivial,
    Inclusion,
    Double,
    Mod(i64),
    Table(Vec<(String, String)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDef {
    pub src: String,
    pub tgt: String,
    pub rule: MapRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionRule {
    Trivial,
    Conjugation,
    Negation,
    Table(Vec<(String, String, String)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionDef {
    pub actor: String,
    pub carrier: String,
    pub rule: ActionRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftRule {
    Trivial,
    Commutator,
    Parity,
    Table(Vec<(String, String, String)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftDef {
    pub e: String,
    pub l: String,
    pub rule: LiftRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum XmodDef {
    Assemble { delta: String, bdry: String, act_e: String, act_l: String, lift: String },
    Q1Of(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellDef {
    Morphism { src: String, tgt: String, mu: String, psi: String, phi: String },
    Lax {
        base: String,
        s: Vec<(String, String)>,
        t: Vec<(String, String)>,
        pi: Vec<(String, String, String)>,
    },
    TwoFold { base: String, k: Vec<(String, String)> },
}

/// Probe-bound overrides declared in a file header.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProbeDef {
    pub int_bound: Option<i64>,
    pub word_len: Option<usize>,
    pub max_tuples: Option<usize>,
}

/// A parsed model file: named definitions in declaration order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ModelFile {
    pub seed: Option<u64>,
    pub probe: ProbeDef,
    pub groups: Vec<(String, GroupDef)>,
    pub maps: Vec<(String, MapDef)>,
    pub actions: Vec<(String, ActionDef)>,
    pub lifts: Vec<(String, LiftDef)>,
    pub xmods: Vec<(String, XmodDef)>,
    pub cells: Vec<(String, CellDef)>,
}

impl ModelFile {
    /// Whether any section defines `name`.
    pub fn defines(&self, name: &str) -> bool {
        self.groups.iter().any(|(n, _)| n == name)
            || self.maps.iter().any(|(n, _)| n == name)
            || self.actions.iter().any(|(n, _)| n == name)
            || self.lifts.iter().any(|(n, _)| n == name)
            || self.xmods.iter().any(|(n, _)| n == name)
            || self.cells.iter().any(|(n, _)| n == name)
    }
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, col, msg: msg.into() }
}

fn col_of(raw: &str, token: &str) -> usize {
    raw.find(token).map_or(1, |i| i + 1)
}

enum Section {
    Group(String, GroupDef),
    Map(String, MapDef),
    Action(String, ActionDef),
    Lift(String, LiftDef),
    Xmod(String, Option<XmodDef>, PartialXmod),
    Cell(String, Option<CellDef>),
}

#[derive(Default)]
struct PartialXmod {
    delta: Option<String>,
    bdry: Option<String>,
    act_e: Option<String>,
    act_l: Option<String>,
    lift: Option<String>,
}

/// Parses model text; errors carry line/column.
pub fn parse(text: &str) -> Result<ModelFile, ParseError> {
    let mut model = ModelFile::default();
    let mut current: Option<(usize, Section)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();

        if line.starts_with('[') {
            flush(&mut model, current.take())?;
            current = Some((lineno, open_section(raw, lineno, line)?));
            continue;
        }

        match current.as_mut().map(|(l, s)| (*l, s)) {
            None => match toks[0] {
                "seed" => {
                    let v = toks.get(1).ok_or_else(|| err(lineno, 1, "seed needs a value"))?;
                    model.seed = Some(
                        v.parse().map_err(|_| err(lineno, col_of(raw, v), "seed must be a u64"))?,
                    );
                }
                "probe" => {
                    let mut i = 1;
                    while i + 1 < toks.len() + 1 && i < toks.len() {
                        let key = toks[i];
                        let v = toks
                            .get(i + 1)
                            .ok_or_else(|| err(lineno, col_of(raw, key), "probe key needs a value"))?;
                        let parsed: usize = v
                            .parse()
                            .map_err(|_| err(lineno, col_of(raw, v), "probe bound must be a number"))?;
                        match key {
                            "int-bound" => model.probe.int_bound = Some(parsed as i64),
                            "word-len" => model.probe.word_len = Some(parsed),
                            "max-tuples" => model.probe.max_tuples = Some(parsed),
                            other => {
                                return Err(err(
                                    lineno,
                                    col_of(raw, other),
                                    format!("unknown probe key `{other}`"),
                                ))
                            }
                        }
                        i += 2;
                    }
                }
                other => {
                    return Err(err(lineno, col_of(raw, other), format!("unexpected `{other}` outside a section")))
                }
            },
            Some((_, section)) => feed(section, raw, lineno, &toks)?,
        }
    }
    flush(&mut model, current.take())?;
    Ok(model)
}

fn open_section(raw: &str, lineno: usize, line: &str) -> Result<Section, ParseError> {
    let inner = line
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err(lineno, 1, "section heading must be bracketed"))?;
    let toks: Vec<&str> = inner.split_whitespace().collect();
    let kind = *toks.first().ok_or_else(|| err(lineno, 2, "empty section heading"))?;
    let name = toks
        .get(1)
        .ok_or_else(|| err(lineno, col_of(raw, kind), format!("`{kind}` section needs a name")))?
        .to_string();
    let arrow = |want: &str, pos: usize| -> Result<(String, String), ParseError> {
        // headings like `[map name : A -> B]` or `[action name : G on E]`
        if toks.get(2) != Some(&":") {
            return Err(err(lineno, col_of(raw, &name), "expected `: SRC -> TGT` in heading"));
        }
        let a = toks.get(3).ok_or_else(|| err(lineno, pos, "missing source name"))?;
        if toks.get(4) != Some(&want) {
            return Err(err(lineno, col_of(raw, a), format!("expected `{want}` in heading")));
        }
        let b = toks.get(5).ok_or_else(|| err(lineno, pos, "missing target name"))?;
        Ok((a.to_string(), b.to_string()))
    };
    match kind {
        "group" => Ok(Section::Group(name, GroupDef::Trivial)),
        "map" => {
            let (src, tgt) = arrow("->", 1)?;
            Ok(Section::Map(name, MapDef { src, tgt, rule: MapRule::Identity }))
        }
        "action" => {
            let (actor, carrier) = arrow("on", 1)?;
            Ok(Section::Action(name, ActionDef { actor, carrier, rule: ActionRule::Trivial }))
        }
        "lift" => {
            let (e, l) = arrow("->", 1)?;
            Ok(Section::Lift(name, LiftDef { e, l, rule: LiftRule::Trivial }))
        }
        "xmod" => Ok(Section::Xmod(name, None, PartialXmod::default())),
        "cell" => Ok(Section::Cell(name, None)),
        other => Err(err(lineno, 2, format!("unknown section kind `{other}`"))),
    }
}

fn feed(section: &mut Section, raw: &str, lineno: usize, toks: &[&str]) -> Result<(), ParseError> {
    let need = |n: usize, what: &str| -> Result<(), ParseError> {
        if toks.len() < n {
            Err(err(lineno, raw.len().max(1), format!("expected {what}")))
        } else {
            Ok(())
        }
    };
    match section {
        Section::Group(_, def) => match toks[0] {
            "trivial" => *def = GroupDef::Trivial,
            "integers" => *def = GroupDef::Integers,
            "cyclic" => {
                need(2, "cyclic N")?;
                *def = GroupDef::Cyclic(
                    toks[1].parse().map_err(|_| err(lineno, col_of(raw, toks[1]), "cyclic order must be an integer"))?,
                );
            }
            "free" => *def = GroupDef::Free(toks[1..].iter().map(|s| s.to_string()).collect()),
            "perm" => {
                need(2, "perm DEGREE")?;
                let degree = toks[1]
                    .parse()
                    .map_err(|_| err(lineno, col_of(raw, toks[1]), "perm degree must be a number"))?;
                *def = GroupDef::Perm { degree, gens: Vec::new() };
            }
            "gen" => {
                need(2, "gen DIGITS")?;
                let GroupDef::Perm { degree, gens } = def else {
                    return Err(err(lineno, 1, "`gen` is only valid after `perm`"));
                };
                let digits: Option<Vec<usize>> =
                    toks[1].chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
                let p = digits
                    .ok_or_else(|| err(lineno, col_of(raw, toks[1]), "generator must be digits in one-line notation"))?;
                if p.len() != *degree {
                    return Err(err(lineno, col_of(raw, toks[1]), "generator length differs from degree"));
                }
                gens.push(p);
            }
            "subgroup" => {
                need(2, "subgroup PARENT")?;
                *def = GroupDef::Subgroup { parent: toks[1].to_string(), elems: Vec::new() };
            }
            "elem" => {
                need(2, "elem NAME")?;
                let GroupDef::Subgroup { elems, .. } = def else {
                    return Err(err(lineno, 1, "`elem` is only valid after `subgroup`"));
                };
                elems.push(toks[1].to_string());
            }
            other => return Err(err(lineno, col_of(raw, other), format!("unknown group rule `{other}`"))),
        },
        Section::Map(_, def) => match toks[0] {
            "identity" => def.rule = MapRule::Identity,
            "trivial" => def.rule = MapRule::Trivial,
            "inclusion" => def.rule = MapRule::Inclusion,
            "double" => def.rule = MapRule::Double,
            "mod" => {
                need(2, "mod N")?;
                def.rule = MapRule::Mod(
                    toks[1].parse().map_err(|_| err(lineno, col_of(raw, toks[1]), "modulus must be an integer"))?,
                );
            }
            "table" => def.rule = MapRule::Table(Vec::new()),
            "pair" => {
                need(3, "pair X Y")?;
                let MapRule::Table(rows) = &mut def.rule else {
                    return Err(err(lineno, 1, "`pair` is only valid after `table`"));
                };
                rows.push((toks[1].to_string(), toks[2].to_string()));
            }
            other => return Err(err(lineno, col_of(raw, other), format!("unknown map rule `{other}`"))),
        },
        Section::Action(_, def) => match toks[0] {
            "trivial" => def.rule = ActionRule::Trivial,
            "conjugation" => def.rule = ActionRule::Conjugation,
            "negation" => def.rule = ActionRule::Negation,
            "table" => def.rule = ActionRule::Table(Vec::new()),
            "row" => {
                need(4, "row G X Y")?;
                let ActionRule::Table(rows) = &mut def.rule else {
                    return Err(err(lineno, 1, "`row` is only valid after `table`"));
                };
                rows.push((toks[1].to_string(), toks[2].to_string(), toks[3].to_string()));
            }
            other => return Err(err(lineno, col_of(raw, other), format!("unknown action rule `{other}`"))),
        },
        Section::Lift(_, def) => match toks[0] {
            "trivial" => def.rule = LiftRule::Trivial,
            "commutator" => def.rule = LiftRule::Commutator,
            "parity" => def.rule = LiftRule::Parity,
            "table" => def.rule = LiftRule::Table(Vec::new()),
            "row" => {
                need(4, "row A B L")?;
                let LiftRule::Table(rows) = &mut def.rule else {
                    return Err(err(lineno, 1, "`row` is only valid after `table`"));
                };
                rows.push((toks[1].to_string(), toks[2].to_string(), toks[3].to_string()));
            }
            other => return Err(err(lineno, col_of(raw, other), format!("unknown lift rule `{other}`"))),
        },
        Section::Xmod(_, resolved, partial) => match toks[0] {
            "q1-of" => {
                need(2, "q1-of NAME")?;
                *resolved = Some(XmodDef::Q1Of(toks[1].to_string()));
            }
            key @ ("delta" | "bdry" | "act_e" | "act_l" | "lift") => {
                need(2, "a definition name")?;
                let slot = match key {
                    "delta" => &mut partial.delta,
                    "bdry" => &mut partial.bdry,
                    "act_e" => &mut partial.act_e,
                    "act_l" => &mut partial.act_l,
                    _ => &mut partial.lift,
                };
                *slot = Some(toks[1].to_string());
            }
            other => return Err(err(lineno, col_of(raw, other), format!("unknown xmod key `{other}`"))),
        },
        Section::Cell(_, def) => match toks[0] {
            "morphism" => {
                need(3, "morphism SRC TGT")?;
                *def = Some(CellDef::Morphism {
                    src: toks[1].to_string(),
                    tgt: toks[2].to_string(),
                    mu: String::new(),
                    psi: String::new(),
                    phi: String::new(),
                });
            }
            key @ ("mu" | "psi" | "phi") => {
                need(2, "a map name")?;
                let Some(CellDef::Morphism { mu, psi, phi, .. }) = def else {
                    return Err(err(lineno, 1, format!("`{key}` is only valid inside a morphism cell")));
                };
                let slot = match key {
                    "mu" => mu,
                    "psi" => psi,
                    _ => phi,
                };
                *slot = toks[1].to_string();
            }
            "lax" => {
                need(2, "lax BASECELL")?;
                *def = Some(CellDef::Lax {
                    base: toks[1].to_string(),
                    s: Vec::new(),
                    t: Vec::new(),
                    pi: Vec::new(),
                });
            }
            "s" => {
                need(3, "s G E")?;
                let Some(CellDef::Lax { s, .. }) = def else {
                    return Err(err(lineno, 1, "`s` is only valid inside a lax cell"));
                };
                s.push((toks[1].to_string(), toks[2].to_string()));
            }
            "t" => {
                need(3, "t E L")?;
                let Some(CellDef::Lax { t, .. }) = def else {
                    return Err(err(lineno, 1, "`t` is only valid inside a lax cell"));
                };
                t.push((toks[1].to_string(), toks[2].to_string()));
            }
            "pi" => {
                need(4, "pi G H L")?;
                let Some(CellDef::Lax { pi, .. }) = def else {
                    return Err(err(lineno, 1, "`pi` is only valid inside a lax cell"));
                };
                pi.push((toks[1].to_string(), toks[2].to_string(), toks[3].to_string()));
            }
            "twofold" => {
                need(2, "twofold LAXCELL")?;
                *def = Some(CellDef::TwoFold { base: toks[1].to_string(), k: Vec::new() });
            }
            "k" => {
                need(3, "k G L")?;
                let Some(CellDef::TwoFold { k, .. }) = def else {
                    return Err(err(lineno, 1, "`k` is only valid inside a twofold cell"));
                };
                k.push((toks[1].to_string(), toks[2].to_string()));
            }
            other => return Err(err(lineno, col_of(raw, other), format!("unknown cell key `{other}`"))),
        },
    }
    Ok(())
}

fn flush(model: &mut ModelFile, section: Option<(usize, Section)>) -> Result<(), ParseError> {
    let Some((lineno, section)) = section else { return Ok(()) };
    match section {
        Section::Group(name, def) => model.groups.push((name, def)),
        Section::Map(name, def) => model.maps.push((name, def)),
        Section::Action(name, def) => model.actions.push((name, def)),
        Section::Lift(name, def) => model.lifts.push((name, def)),
        Section::Xmod(name, resolved, partial) => {
            let def = match resolved {
                Some(d) => d,
                None => {
                    let take = |o: Option<String>, what: &str| {
                        o.ok_or_else(|| err(lineno, 1, format!("xmod `{name}` is missing `{what}`")))
                    };
                    XmodDef::Assemble {
                        delta: take(partial.delta, "delta")?,
                        bdry: take(partial.bdry, "bdry")?,
                        act_e: take(partial.act_e, "act_e")?,
                        act_l: take(partial.act_l, "act_l")?,
                        lift: take(partial.lift, "lift")?,
                    }
                }
            };
            model.xmods.push((name, def));
        }
        Section::Cell(name, def) => {
            let def = def.ok_or_else(|| err(lineno, 1, format!("cell `{name}` has no definition")))?;
            if let CellDef::Morphism { mu, psi, phi, .. } = &def {
                for (slot, v) in [("mu", mu), ("psi", psi), ("phi", phi)] {
                    if v.is_empty() {
                        return Err(err(lineno, 1, format!("cell `{name}` is missing `{slot}`")));
                    }
                }
            }
            model.cells.push((name, def));
        }
    }
    Ok(())
}

/// Renders a model deterministically; `parse(emit(m)) == m`.
pub fn emit(model: &ModelFile) -> String {
    let mut out = String::new();
    let mut push = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    if let Some(seed) = model.seed {
        push(format!("seed {seed}"));
    }
    let p = &model.probe;
    if p.int_bound.is_some() || p.word_len.is_some() || p.max_tuples.is_some() {
        let mut line = "probe".to_string();
        if let Some(b) = p.int_bound {
            line.push_str(&format!(" int-bound {b}"));
        }
        if let Some(w) = p.word_len {
            line.push_str(&format!(" word-len {w}"));
        }
        if let Some(m) = p.max_tuples {
            line.push_str(&format!(" max-tuples {m}"));
        }
        push(line);
    }
    for (name, def) in &model.groups {
        push(format!("\n[group {name}]"));
        match def {
            GroupDef::Trivial => push("trivial".into()),
            GroupDef::Cyclic(n) => push(format!("cyclic {n}")),
            GroupDef::Integers => push("integers".into()),
            GroupDef::Free(syms) => push(format!("free {}", syms.join(" "))),
            GroupDef::Perm { degree, gens } => {
                push(format!("perm {degree}"));
                for g in gens {
                    push(format!("gen {}", g.iter().map(|d| d.to_string()).collect::<String>()));
                }
            }
            GroupDef::Subgroup { parent, elems } => {
                push(format!("subgroup {parent}"));
                for e in elems {
                    push(format!("elem {e}"));
                }
            }
        }
    }
    for (name, def) in &model.maps {
        push(format!("\n[map {name} : {} -> {}]", def.src, def.tgt));
        match &def.rule {
            MapRule::Identity => push("identity".into()),
            MapRule::Trivial => push("trivial".into()),
            MapRule::Inclusion => push("inclusion".into()),
            MapRule::Double => push("double".into()),
            MapRule::Mod(n) => push(format!("mod {n}")),
            MapRule::Table(rows) => {
                push("table".into());
                for (x, y) in rows {
                    push(format!("pair {x} {y}"));
                }
            }
        }
    }
    for (name, def) in &model.actions {
        push(format!("\n[action {name} : {} on {}]", def.actor, def.carrier));
        match &def.rule {
            ActionRule::Trivial => push("trivial".into()),
            ActionRule::Conjugation => push("conjugation".into()),
            ActionRule::Negation => push("negation".into()),
            ActionRule::Table(rows) => {
                push("table".into());
                for (g, x, y) in rows {
                    push(format!("row {g} {x} {y}"));
                }
            }
        }
    }
    for (name, def) in &model.lifts {
        push(format!("\n[lift {name} : {} -> {}]", def.e, def.l));
        match &def.rule {
            LiftRule::Trivial => push("trivial".into()),
            LiftRule::Commutator => push("commutator".into()),
            LiftRule::Parity => push("parity".into()),
            LiftRule::Table(rows) => {
                push("table".into());
                for (a, b, l) in rows {
                    push(format!("row {a} {b} {l}"));
                }
            }
        }
    }
    for (name, def) in &model.xmods {
        push(format!("\n[xmod {name}]"));
        match def {
            XmodDef::Q1Of(base) => push(format!("q1-of {base}")),
            XmodDef::Assemble { delta, bdry, act_e, act_l, lift } => {
                push(format!("delta {delta}"));
                push(format!("bdry {bdry}"));
                push(format!("act_e {act_e}"));
                push(format!("act_l {act_l}"));
                push(format!("lift {lift}"));
            }
        }
    }
    for (name, def) in &model.cells {
        push(format!("\n[cell {name}]"));
        match def {
            CellDef::Morphism { src, tgt, mu, psi, phi } => {
                push(format!("morphism {src} {tgt}"));
                push(format!("mu {mu}"));
                push(format!("psi {psi}"));
                push(format!("phi {phi}"));
            }
            CellDef::Lax { base, s, t, pi } => {
                push(format!("lax {base}"));
                for (g, e) in s {
                    push(format!("s {g} {e}"));
                }
                for (e, l) in t {
                    push(format!("t {e} {l}"));
                }
                for (g, h, l) in pi {
                    push(format!("pi {g} {h} {l}"));
                }
            }
            CellDef::TwoFold { base, k } => {
                push(format!("twofold {base}"));
                for (g, l) in k {
                    push(format!("k {g} {l}"));
                }
            }
        }
    }
    out
}
