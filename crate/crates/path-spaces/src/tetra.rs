//! The tetrahedron group: level-0 of the path space of the triangle space,
//! realized inside `Gr0(𝒫(𝒫(A))) ⋉ Gr1(𝒫(𝒫(A)))` as the constrained tuples
//! `((g,x,1,z,w), (1,1,1,1,f,l,1,m))` with four faces into the triangle
//! level-0 carrier.
//!
//! The faces are the generic structure maps of the iterated path space,
//! cross-checked against the closed coordinate forms
//!
//! * `d3 = Pr0`: `(g,x,1,z,w)`,
//! * `d2 = Pr1 = t0 · β′(t1)`: `(g,x,1,zf,(f⁻¹▷′w)l)`,
//! * `d1 = 𝒫(d1)` levelwise: `(g,xz,1,f,lm)`,
//! * `d0 = 𝒫(d0)` levelwise: `(g∂(x), zδ(w), 1, fδ(l), m)`.

use group_kernel::{Element, Group, GroupError, ProbeConfig, Result};
use xmod_core::TwoCrossedModule;

use crate::faces::DoubleFaces;
use crate::triangle::{is_triangle0, is_triangle1, TriangleSpace};

/// The tetrahedron carrier with its ambient group and faces.
pub struct TetraGroup {
    /// Ambient group `Gr0(𝒫(𝒫(A))) ⋉ Gr1(𝒫(𝒫(A)))` along the first lifted
    /// action of the double path space.
    pub ambient: Group,
}

/// Builds the tetrahedron carrier over the double path space.
pub fn tetra_group(df: &DoubleFaces) -> TetraGroup {
    let ambient = crate::carriers::sd("⋉", &df.outer.total.act_e);
    TetraGroup { ambient }
}

impl TetraGroup {
    /// Packs `((g,x,1,z,w), (1,1,1,1,f,l,1,m))`.
    #[allow(clippy::too_many_arguments)]
    pub fn elem(
        &self,
        df: &DoubleFaces,
        g: &Element,
        x: &Element,
        z: &Element,
        w: &Element,
        f: &Element,
        l: &Element,
        m: &Element,
    ) -> Element {
        let ic = &df.inner.carriers;
        let oc = &df.outer.carriers;
        let a = &ic.base;
        let t0 = oc.pk0(&ic.pk0(g, x), &ic.pk1(&a.e.id(), z, w));
        let t1 = oc.pk1(
            &ic.pk1(&a.e.id(), &a.e.id(), &a.l.id()),
            &ic.pk1(&a.e.id(), f, l),
            &ic.pk2(&a.l.id(), m),
        );
        self.ambient.pair(&t0, &t1)
    }

    /// The seven free coordinates `(g,x,z,w,f,l,m)` of a member.
    #[allow(clippy::type_complexity)]
    pub fn un(
        &self,
        df: &DoubleFaces,
        t: &Element,
    ) -> (Element, Element, Element, Element, Element, Element, Element) {
        let (t0, t1) = self.parts(df, t);
        let (g, x, _, z, w) = df.un0(&t0);
        let (_, _, _, _, f, l, _, m) = df.un1(&t1);
        (g, x, z, w, f, l, m)
    }

    /// The two layers `(t0, t1)` of an element, tagged with the outer
    /// carriers.
    pub fn parts(&self, df: &DoubleFaces, t: &Element) -> (Element, Element) {
        (t.first(&df.outer.carriers.gr0), t.second(&df.outer.carriers.gr1))
    }

    /// Membership: the two layers have the triangle shapes and the first
    /// layer of `t1` is trivial.
    pub fn is_member(&self, df: &DoubleFaces, t: &Element) -> bool {
        let (t0, t1) = self.parts(df, t);
        let (a1, e1, k1, _, _, _, _, _) = df.un1(&t1);
        is_triangle0(df, &t0)
            && is_triangle1(df, &t1)
            && a1.is_identity()
            && e1.is_identity()
            && k1.is_identity()
    }

    /// Face `d3 = Pr0`: the underlying triangle level-0 element.
    pub fn d3(&self, df: &DoubleFaces, t: &Element) -> Element {
        self.parts(df, t).0
    }

    /// Face `d2 = Pr1`: `t0 · β′(t1)` in `Gr0(𝒫(𝒫(A)))`.
    pub fn d2(&self, df: &DoubleFaces, t: &Element) -> Element {
        let (t0, t1) = self.parts(df, t);
        t0.mul(&df.outer.total.bdry.apply(&t1))
    }

    /// Face `d1 = 𝒫(d1)` applied levelwise: `(d1(t0), d1(t1))`, packed back
    /// into `Gr0(𝒫(𝒫(A)))`.
    pub fn d1(&self, df: &DoubleFaces, t: &Element) -> Element {
        self.levelwise(df, t, 1)
    }

    /// Face `d0 = 𝒫(d0)` applied levelwise.
    pub fn d0(&self, df: &DoubleFaces, t: &Element) -> Element {
        self.levelwise(df, t, 0)
    }

    fn levelwise(&self, df: &DoubleFaces, t: &Element, i: usize) -> Element {
        let (t0, t1) = self.parts(df, t);
        df.outer.carriers.pk0(&df.faces[i].phi.apply(&t0), &df.faces[i].psi.apply(&t1))
    }
}

/// Verifies the tetrahedron carrier over the probe sets: membership is
/// closed under products and inverses, each face lands in triangle shape,
/// each face is a homomorphism into `Gr0(𝒫(𝒫(A)))` (for `d2` this uses the
/// triangle product), and every face matches its closed coordinate form.
pub fn tetra_check(
    a: &TwoCrossedModule,
    ts: &TriangleSpace,
    tg: &TetraGroup,
    cfg: &ProbeConfig,
) -> Result<()> {
    let df = &ts.df;
    let ic = &df.inner.carriers;
    let gs = a.g.elements()?;
    let es = a.e.elements()?;
    let ls = a.l.elements()?;

    // A deterministic spread over the seven coordinates.
    let pick = |v: &[Element], i: usize| v[i % v.len()].clone();
    let mut members = Vec::new();
    for (i, (g, x)) in cfg.pairs2(&gs, &es).into_iter().enumerate() {
        for j in 0..4usize {
            let s = i.wrapping_mul(31).wrapping_add(j * 7);
            members.push(tg.elem(
                df,
                &g,
                &x,
                &pick(&es, s + 1),
                &pick(&ls, s + 2),
                &pick(&es, s + 3),
                &pick(&ls, s + 5),
                &pick(&ls, s + 7),
            ));
        }
    }
    members.truncate(cfg.max_tuples.min(512));
    if members.is_empty() {
        return Err(GroupError::NotEnumerable("tetra probe empty".into()));
    }

    let fail = |what: &str, witness: String| -> Result<()> {
        Err(GroupError::AxiomFailure { axiom: format!("tetra {what}"), witness })
    };

    for t in &members {
        if !tg.is_member(df, t) {
            return fail("shape", format!("{t:?}"));
        }
        if !tg.is_member(df, &t.inv()) {
            return fail("inverse closure", format!("{t:?}"));
        }

        // Closed forms of the four faces.
        let (g, x, z, w, f, l, m) = tg.un(df, t);
        let dl = |y: &Element| a.delta.apply(y);
        let mk = |g: &Element, x: &Element, z: &Element, w: &Element| {
            df.outer.carriers.pk0(&ic.pk0(g, x), &ic.pk1(&a.e.id(), z, w))
        };
        let want = [
            mk(&g.mul(&a.bdry.apply(&x)), &z.mul(&dl(&w)), &f.mul(&dl(&l)), &m),
            mk(&g, &x.mul(&z), &f, &l.mul(&m)),
            mk(&g, &x, &z.mul(&f), &a.secondary_action(&f.inv(), &w).mul(&l)),
            mk(&g, &x, &z, &w),
        ];
        let got = [tg.d0(df, t), tg.d1(df, t), tg.d2(df, t), tg.d3(df, t)];
        for (i, (got, want)) in got.iter().zip(&want).enumerate() {
            if got != want {
                return Err(GroupError::MapMismatch(format!(
                    "tetra face d{i} disagrees with its closed form at {t:?}"
                )));
            }
            if !is_triangle0(df, got) {
                return fail("face image shape", format!("d{i} of {t:?}"));
            }
        }
    }

    for (s, t) in cfg.pairs(&members) {
        let st = s.mul(&t);
        if !tg.is_member(df, &st) {
            return fail("product closure", format!("{s:?} · {t:?}"));
        }
        for (i, face) in [TetraGroup::d0, TetraGroup::d1, TetraGroup::d2, TetraGroup::d3]
            .iter()
            .enumerate()
        {
            if face(tg, df, &st) != face(tg, df, &s).mul(&face(tg, df, &t)) {
                return fail(
                    "face homomorphism",
                    format!("d{i} at {s:?} · {t:?}"),
                );
            }
        }
    }
    Ok(())
}
