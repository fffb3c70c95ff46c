//! Turns parsed model definitions into live algebraic objects.
//!
//! Definitions are resolved in declaration order, so every name must be
//! declared before its first use. Element tokens are resolved against their
//! carrier: by declared name where the group has one, otherwise as an
//! integer literal.

use std::collections::HashMap;

use anyhow::{anyhow, bail, Context, Result};
use group_kernel::{Element, Group, Hom, LeftAction, Payload};
use lax::{LaxHomotopy, LaxTwoFold};
use xmod_core::{fixtures, Lifting, TwoCrossedModule, XModMorphism};

use crate::model::{
    ActionRule, CellDef, GroupDef, LiftRule, MapRule, ModelFile, XmodDef,
};

/// A resolved cell.
#[derive(Clone)]
pub enum Cell {
    Morphism(XModMorphism),
    Lax(LaxHomotopy),
    TwoFold(LaxTwoFold),
}

/// All objects built from one model file.
#[derive(Default, Clone)]
pub struct Resolved {
    pub groups: HashMap<String, Group>,
    pub maps: HashMap<String, Hom>,
    pub actions: HashMap<String, LeftAction>,
    pub lifts: HashMap<String, Lifting>,
    pub xmods: HashMap<String, TwoCrossedModule>,
    pub cells: HashMap<String, Cell>,
}

fn int_of(e: &Element) -> i64 {
    match e.payload() {
        Payload::Int(v) => *v,
        _ => 0,
    }
}

/// Resolves an element token against its carrier.
pub fn element(g: &Group, token: &str) -> Result<Element> {
    if let Some(e) = g.by_name(token) {
        return Ok(e);
    }
    if let Ok(v) = token.parse::<i64>() {
        return Ok(g.int(v));
    }
    bail!("`{token}` is not an element of `{}`", g.name())
}

/// Builds every definition in the file.
pub fn resolve(model: &ModelFile) -> Result<Resolved> {
    let mut r = Resolved::default();

    for (name, def) in &model.groups {
        let g = match def {
            GroupDef::Trivial => Group::trivial(),
            GroupDef::Cyclic(n) => Group::cyclic(*n),
            GroupDef::Integers => Group::integers(),
            GroupDef::Free(syms) => Group::free(name, syms.clone()),
            GroupDef::Perm { degree, gens } => fixtures::perm_group(name, *degree, gens),
            GroupDef::Subgroup { parent, elems } => {
                let p = r
                    .groups
                    .get(parent)
                    .ok_or_else(|| anyhow!("group `{name}`: unknown parent `{parent}`"))?;
                let es = elems
                    .iter()
                    .map(|t| element(p, t))
                    .collect::<Result<Vec<_>>>()
                    .with_context(|| format!("group `{name}`"))?;
                Group::sub_from_elements(name, p, es)
                    .map_err(|e| anyhow!("group `{name}`: {e}"))?
            }
        };
        r.groups.insert(name.clone(), g);
    }

    for (name, def) in &model.maps {
        let src = lookup(&r.groups, &def.src, "group", name)?;
        let tgt = lookup(&r.groups, &def.tgt, "group", name)?;
        let h = match &def.rule {
            MapRule::Identity => {
                if src != tgt {
                    bail!("map `{name}`: identity requires equal endpoints");
                }
                Hom::identity(src)
            }
            MapRule::Trivial => Hom::trivial(src, tgt),
            MapRule::Inclusion => Hom::inclusion(src),
            MapRule::Double => {
                let tgt = tgt.clone();
                Hom::from_fn(src, &tgt.clone(), move |x| tgt.int(2 * int_of(x)))
            }
            MapRule::Mod(n) => {
                let n = *n;
                let tgt = tgt.clone();
                Hom::from_fn(src, &tgt.clone(), move |x| tgt.int(int_of(x).rem_euclid(n)))
            }
            MapRule::Table(rows) => {
                let entries = rows
                    .iter()
                    .map(|(x, y)| Ok((element(src, x)?, element(tgt, y)?)))
                    .collect::<Result<Vec<_>>>()
                    .with_context(|| format!("map `{name}`"))?;
                Hom::from_table(src, tgt, &entries).map_err(|e| anyhow!("map `{name}`: {e}"))?
            }
        };
        r.maps.insert(name.clone(), h);
    }

    for (name, def) in &model.actions {
        let actor = lookup(&r.groups, &def.actor, "group", name)?;
        let carrier = lookup(&r.groups, &def.carrier, "group", name)?;
        let a = match &def.rule {
            ActionRule::Trivial => LeftAction::trivial(actor, carrier),
            ActionRule::Conjugation => {
                if actor != carrier {
                    bail!("action `{name}`: conjugation requires actor = carrier");
                }
                LeftAction::conjugation(actor)
            }
            ActionRule::Negation => {
                let c = carrier.clone();
                LeftAction::from_fn(actor, &c.clone(), move |g, x| {
                    if int_of(g) % 2 != 0 {
                        c.int(-int_of(x))
                    } else {
                        x.clone()
                    }
                })
            }
            ActionRule::Table(rows) => {
                let entries = rows
                    .iter()
                    .map(|(g, x, y)| Ok(((element(actor, g)?, element(carrier, x)?), element(carrier, y)?)))
                    .collect::<Result<Vec<_>>>()
                    .with_context(|| format!("action `{name}`"))?;
                let map: HashMap<(Payload, Payload), Element> = entries
                    .into_iter()
                    .map(|((g, x), y)| ((g.payload().clone(), x.payload().clone()), y))
                    .collect();
                let what = name.clone();
                LeftAction::from_fn(actor, carrier, move |g, x| {
                    map.get(&(g.payload().clone(), x.payload().clone()))
                        .unwrap_or_else(|| panic!("action `{what}` table is missing an entry"))
                        .clone()
                })
            }
        };
        r.actions.insert(name.clone(), a);
    }

    for (name, def) in &model.lifts {
        let e = lookup(&r.groups, &def.e, "group", name)?;
        let l = lookup(&r.groups, &def.l, "group", name)?;
        let lift = match &def.rule {
            LiftRule::Trivial => Lifting::trivial(e, l),
            LiftRule::Commutator => {
                let l2 = l.clone();
                Lifting::from_fn(e, l, move |a, b| l2.from_parent(&a.commutator(b)))
            }
            LiftRule::Parity => {
                let l2 = l.clone();
                Lifting::from_fn(e, l, move |m, n| {
                    if int_of(m) % 2 != 0 {
                        l2.int(int_of(n))
                    } else {
                        l2.id()
                    }
                })
            }
            LiftRule::Table(rows) => {
                let entries = rows
                    .iter()
                    .map(|(a, b, v)| Ok(((element(e, a)?, element(e, b)?), element(l, v)?)))
                    .collect::<Result<Vec<_>>>()
                    .with_context(|| format!("lift `{name}`"))?;
                let map: HashMap<(Payload, Payload), Element> = entries
                    .into_iter()
                    .map(|((a, b), v)| ((a.payload().clone(), b.payload().clone()), v))
                    .collect();
                let what = name.clone();
                Lifting::from_fn(e, l, move |a, b| {
                    map.get(&(a.payload().clone(), b.payload().clone()))
                        .unwrap_or_else(|| panic!("lift `{what}` table is missing an entry"))
                        .clone()
                })
            }
        };
        r.lifts.insert(name.clone(), lift);
    }

    for (name, def) in &model.xmods {
        let xm = match def {
            XmodDef::Q1Of(base) => {
                let b = lookup(&r.xmods, base, "xmod", name)?;
                lax::q1(b).map_err(|e| anyhow!("xmod `{name}`: {e}"))?.total
            }
            XmodDef::Assemble { delta, bdry, act_e, act_l, lift } => {
                let delta = lookup(&r.maps, delta, "map", name)?.clone();
                let bdry = lookup(&r.maps, bdry, "map", name)?.clone();
                let act_e = lookup(&r.actions, act_e, "action", name)?.clone();
                let act_l = lookup(&r.actions, act_l, "action", name)?.clone();
                let lift = lookup(&r.lifts, lift, "lift", name)?.clone();
                TwoCrossedModule::new(name, delta, bdry, act_e, act_l, lift)
            }
        };
        r.xmods.insert(name.clone(), xm);
    }

    for (name, def) in &model.cells {
        let cell = match def {
            CellDef::Morphism { src, tgt, mu, psi, phi } => {
                let src = lookup(&r.xmods, src, "xmod", name)?;
                let tgt = lookup(&r.xmods, tgt, "xmod", name)?;
                let mu = lookup(&r.maps, mu, "map", name)?.clone();
                let psi = lookup(&r.maps, psi, "map", name)?.clone();
                let phi = lookup(&r.maps, phi, "map", name)?.clone();
                Cell::Morphism(XModMorphism::new(src, tgt, mu, psi, phi))
            }
            CellDef::Lax { base, s, t, pi } => {
                let Cell::Morphism(f) = lookup(&r.cells, base, "cell", name)? else {
                    bail!("cell `{name}`: lax base `{base}` is not a morphism cell");
                };
                let a = &f.source;
                let a2 = &f.target;
                let s_tab = table1(a.g.clone(), a2.e.clone(), s)
                    .with_context(|| format!("cell `{name}` (s)"))?;
                let t_tab = table1(a.e.clone(), a2.l.clone(), t)
                    .with_context(|| format!("cell `{name}` (t)"))?;
                let pi_tab = table2(a.g.clone(), a2.l.clone(), pi)
                    .with_context(|| format!("cell `{name}` (pi)"))?;
                let lh = LaxHomotopy::from_fn(
                    f,
                    move |g| s_tab(g),
                    move |e| t_tab(e),
                    move |g, h| pi_tab(g, h),
                )
                .map_err(|e| anyhow!("cell `{name}`: {e}"))?;
                Cell::Lax(lh)
            }
            CellDef::TwoFold { base, k } => {
                let Cell::Lax(lh) = lookup(&r.cells, base, "cell", name)? else {
                    bail!("cell `{name}`: twofold base `{base}` is not a lax cell");
                };
                let k_tab = table1(lh.base.source.g.clone(), lh.base.target.l.clone(), k)
                    .with_context(|| format!("cell `{name}` (k)"))?;
                let tf = LaxTwoFold::from_fn(lh, move |g| k_tab(g))
                    .map_err(|e| anyhow!("cell `{name}`: {e}"))?;
                Cell::TwoFold(tf)
            }
        };
        r.cells.insert(name.clone(), cell);
    }

    Ok(r)
}

fn lookup<'a, T>(
    map: &'a HashMap<String, T>,
    key: &str,
    kind: &str,
    user: &str,
) -> Result<&'a T> {
    map.get(key).ok_or_else(|| anyhow!("`{user}` refers to unknown {kind} `{key}`"))
}

/// A total one-argument table `dom → cod` from name pairs; every element of
/// the (finite) domain must be covered.
fn table1(
    dom: Group,
    cod: Group,
    rows: &[(String, String)],
) -> Result<impl Fn(&Element) -> Element> {
    let mut map: HashMap<Payload, Element> = HashMap::new();
    for (x, y) in rows {
        map.insert(element(&dom, x)?.payload().clone(), element(&cod, y)?);
    }
    for x in dom.elements().map_err(|e| anyhow!("{e}"))? {
        if !map.contains_key(x.payload()) {
            bail!("table is missing the entry for `{}`", dom.describe_element(&x));
        }
    }
    Ok(move |x: &Element| map[x.payload()].clone())
}

/// A total two-argument table over `dom × dom`.
fn table2(
    dom: Group,
    cod: Group,
    rows: &[(String, String, String)],
) -> Result<impl Fn(&Element, &Element) -> Element> {
    let mut map: HashMap<(Payload, Payload), Element> = HashMap::new();
    for (x, y, v) in rows {
        map.insert(
            (element(&dom, x)?.payload().clone(), element(&dom, y)?.payload().clone()),
            element(&cod, v)?,
        );
    }
    for x in dom.elements().map_err(|e| anyhow!("{e}"))? {
        for y in dom.elements().map_err(|e| anyhow!("{e}"))? {
            if !map.contains_key(&(x.payload().clone(), y.payload().clone())) {
                bail!(
                    "table is missing the entry for `{} {}`",
                    dom.describe_element(&x),
                    dom.describe_element(&y)
                );
            }
        }
    }
    Ok(move |x: &Element, y: &Element| map[&(x.payload().clone(), y.payload().clone())].clone())
}
