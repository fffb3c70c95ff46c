//! The built-in fixture corpus, shipped as model files.
//!
//! `fixA` (1 → 1 → Z2), `fixB` (2Z → Z → Z2 with the sign action and parity
//! lifting), `fixC_z2` and `fixC_s3` (1 → G → G), `fixD` (A3 → S3 → 1 with
//! the commutator lifting), the resolution `q1_*` of every finite fixture,
//! and a `cells` file carrying demonstration morphism/lax/2-fold cells.

use crate::model::{
    ActionDef, ActionRule, CellDef, GroupDef, LiftDef, LiftRule, MapDef, MapRule, ModelFile,
    XmodDef,
};

fn group(m: &mut ModelFile, name: &str, def: GroupDef) {
    m.groups.push((name.into(), def));
}

fn map(m: &mut ModelFile, name: &str, src: &str, tgt: &str, rule: MapRule) {
    m.maps.push((name.into(), MapDef { src: src.into(), tgt: tgt.into(), rule }));
}

fn action(m: &mut ModelFile, name: &str, actor: &str, carrier: &str, rule: ActionRule) {
    m.actions.push((name.into(), ActionDef { actor: actor.into(), carrier: carrier.into(), rule }));
}

fn lift(m: &mut ModelFile, name: &str, e: &str, l: &str, rule: LiftRule) {
    m.lifts.push((name.into(), LiftDef { e: e.into(), l: l.into(), rule }));
}

fn assemble(m: &mut ModelFile, name: &str) {
    m.xmods.push((
        name.into(),
        XmodDef::Assemble {
            delta: format!("{name}_delta"),
            bdry: format!("{name}_bdry"),
            act_e: format!("{name}_act_e"),
            act_l: format!("{name}_act_l"),
            lift: format!("{name}_lift"),
        },
    ));
}

fn s3_into(m: &mut ModelFile) {
    group(m, "S3", GroupDef::Perm { degree: 3, gens: vec![vec![1, 2, 0], vec![1, 0, 2]] });
}

fn fix_a_into(m: &mut ModelFile) {
    group(m, "One", GroupDef::Trivial);
    group(m, "Z2", GroupDef::Cyclic(2));
    map(m, "fixA_delta", "One", "One", MapRule::Identity);
    map(m, "fixA_bdry", "One", "Z2", MapRule::Trivial);
    action(m, "fixA_act_e", "Z2", "One", ActionRule::Trivial);
    action(m, "fixA_act_l", "Z2", "One", ActionRule::Trivial);
    lift(m, "fixA_lift", "One", "One", LiftRule::Trivial);
    assemble(m, "fixA");
}

fn fix_c_z2_into(m: &mut ModelFile) {
    group(m, "One", GroupDef::Trivial);
    group(m, "Z2", GroupDef::Cyclic(2));
    map(m, "fixC_z2_delta", "One", "Z2", MapRule::Trivial);
    map(m, "fixC_z2_bdry", "Z2", "Z2", MapRule::Identity);
    action(m, "fixC_z2_act_e", "Z2", "Z2", ActionRule::Conjugation);
    action(m, "fixC_z2_act_l", "Z2", "One", ActionRule::Trivial);
    lift(m, "fixC_z2_lift", "Z2", "One", LiftRule::Trivial);
    assemble(m, "fixC_z2");
}

fn fix_d_into(m: &mut ModelFile) {
    group(m, "One", GroupDef::Trivial);
    s3_into(m);
    group(
        m,
        "A3",
        GroupDef::Subgroup {
            parent: "S3".into(),
            elems: vec!["012".into(), "120".into(), "201".into()],
        },
    );
    map(m, "fixD_delta", "A3", "S3", MapRule::Inclusion);
    map(m, "fixD_bdry", "S3", "One", MapRule::Trivial);
    action(m, "fixD_act_e", "One", "S3", ActionRule::Trivial);
    action(m, "fixD_act_l", "One", "A3", ActionRule::Trivial);
    lift(m, "fixD_lift", "S3", "A3", LiftRule::Commutator);
    assemble(m, "fixD");
}

/// All built-in model files as `(name, model)` pairs.
pub fn corpus() -> Vec<(String, ModelFile)> {
    let mut out = Vec::new();

    let mut a = ModelFile { seed: Some(20240817), ..Default::default() };
    fix_a_into(&mut a);
    a.xmods.push(("q1_fixA".into(), XmodDef::Q1Of("fixA".into())));
    out.push(("fixA".to_string(), a));

    let mut b = ModelFile { seed: Some(20240817), ..Default::default() };
    group(&mut b, "L", GroupDef::Integers);
    group(&mut b, "E", GroupDef::Integers);
    group(&mut b, "Z2", GroupDef::Cyclic(2));
    map(&mut b, "fixB_delta", "L", "E", MapRule::Double);
    map(&mut b, "fixB_bdry", "E", "Z2", MapRule::Mod(2));
    action(&mut b, "fixB_act_e", "Z2", "E", ActionRule::Negation);
    action(&mut b, "fixB_act_l", "Z2", "L", ActionRule::Negation);
    lift(&mut b, "fixB_lift", "E", "L", LiftRule::Parity);
    assemble(&mut b, "fixB");
    out.push(("fixB".to_string(), b));

    let mut c2 = ModelFile { seed: Some(20240817), ..Default::default() };
    fix_c_z2_into(&mut c2);
    c2.xmods.push(("q1_fixC_z2".into(), XmodDef::Q1Of("fixC_z2".into())));
    out.push(("fixC_z2".to_string(), c2));

    let mut c3 = ModelFile { seed: Some(20240817), ..Default::default() };
    group(&mut c3, "One", GroupDef::Trivial);
    s3_into(&mut c3);
    map(&mut c3, "fixC_s3_delta", "One", "S3", MapRule::Trivial);
    map(&mut c3, "fixC_s3_bdry", "S3", "S3", MapRule::Identity);
    action(&mut c3, "fixC_s3_act_e", "S3", "S3", ActionRule::Conjugation);
    action(&mut c3, "fixC_s3_act_l", "S3", "One", ActionRule::Trivial);
    lift(&mut c3, "fixC_s3_lift", "S3", "One", LiftRule::Trivial);
    assemble(&mut c3, "fixC_s3");
    c3.xmods.push(("q1_fixC_s3".into(), XmodDef::Q1Of("fixC_s3".into())));
    out.push(("fixC_s3".to_string(), c3));

    let mut d = ModelFile { seed: Some(20240817), ..Default::default() };
    fix_d_into(&mut d);
    d.xmods.push(("q1_fixD".into(), XmodDef::Q1Of("fixD".into())));
    out.push(("fixD".to_string(), d));

    // Demonstration cells: the trivial morphism FIX-C(Z2) → FIX-D, a
    // nontrivial lax homotopy out of it (ŝ sends the generator to a
    // transposition), and a 2-fold cell shifting it by a 3-cycle.
    let mut cells = ModelFile { seed: Some(20240817), ..Default::default() };
    fix_c_z2_into(&mut cells);
    fix_d_into(&mut cells);
    map(&mut cells, "cd_mu", "One", "A3", MapRule::Trivial);
    map(&mut cells, "cd_psi", "Z2", "S3", MapRule::Trivial);
    map(&mut cells, "cd_phi", "Z2", "One", MapRule::Trivial);
    cells.cells.push((
        "f0".into(),
        CellDef::Morphism {
            src: "fixC_z2".into(),
            tgt: "fixD".into(),
            mu: "cd_mu".into(),
            psi: "cd_psi".into(),
            phi: "cd_phi".into(),
        },
    ));
    cells.cells.push((
        "swap".into(),
        CellDef::Lax {
            base: "f0".into(),
            s: vec![("0".into(), "012".into()), ("1".into(), "102".into())],
            t: vec![("0".into(), "012".into()), ("1".into(), "012".into())],
            pi: vec![
                ("0".into(), "0".into(), "012".into()),
                ("0".into(), "1".into(), "012".into()),
                ("1".into(), "0".into(), "012".into()),
                ("1".into(), "1".into(), "012".into()),
            ],
        },
    ));
    cells.cells.push((
        "rot2".into(),
        CellDef::TwoFold {
            base: "swap".into(),
            k: vec![("0".into(), "120".into()), ("1".into(), "120".into())],
        },
    ));
    out.push(("cells".to_string(), cells));

    out
}
