//! The four face maps of the double path space `𝒫(𝒫(A)) → 𝒫(A)`.
//!
//! The faces are obtained generically — `d1`, `d2` are the two projections
//! of the outer bundle, `d0`, `d3` are the path-space functor applied to the
//! projections of the inner bundle — and each is then cross-checked against
//! the explicit coordinate formulas. A disagreement between the generic and
//! the explicit computation is a hard error: it would mean the two
//! derivations of the same map have diverged.

use group_kernel::{Element, GroupError, ProbeConfig, Result};
use xmod_core::{TwoCrossedModule, XModMorphism};

use crate::bundle::{path_space, path_space_map, PathSpaceBundle};

/// The double path space with its four faces to the single path space.
pub struct DoubleFaces {
    /// The inner bundle `𝒫(A)`.
    pub inner: PathSpaceBundle,
    /// The outer bundle `𝒫(𝒫(A))`.
    pub outer: PathSpaceBundle,
    /// Faces `d0 = 𝒫(pr1)`, `d1 = pr1`, `d2 = pr0`, `d3 = 𝒫(pr0)`, indexed
    /// `[d0, d1, d2, d3]`.
    pub faces: [XModMorphism; 4],
}

impl DoubleFaces {
    /// The eight-coordinate view `(a,e,k,a′,e′,k′,l,l′)` of an outer level-1
    /// element.
    #[allow(clippy::type_complexity)]
    pub fn un1(
        &self,
        t: &Element,
    ) -> (Element, Element, Element, Element, Element, Element, Element, Element) {
        let (x, y, z) = self.outer.carriers.un1(t);
        let (a, e, k) = self.inner.carriers.un1(&x);
        let (a2, e2, k2) = self.inner.carriers.un1(&y);
        let (l, l2) = self.inner.carriers.un2(&z);
        (a, e, k, a2, e2, k2, l, l2)
    }

    /// The five-coordinate view `(g,x,a,e,k)` of an outer level-0 element.
    pub fn un0(&self, t: &Element) -> (Element, Element, Element, Element, Element) {
        let (gx, aek) = self.outer.carriers.un0(t);
        let (g, x) = self.inner.carriers.un0(&gx);
        let (a, e, k) = self.inner.carriers.un1(&aek);
        (g, x, a, e, k)
    }
}

/// Builds the double path space of `a` and its faces, cross-checking every
/// face against the explicit coordinate formulas over the probe sets.
pub fn double_faces(a: &TwoCrossedModule, cfg: &ProbeConfig) -> Result<DoubleFaces> {
    let inner = path_space(a);
    let outer = path_space(&inner.total);
    let faces = [
        path_space_map(&inner.pr1),
        outer.pr1.clone(),
        outer.pr0.clone(),
        path_space_map(&inner.pr0),
    ];
    let df = DoubleFaces { inner, outer, faces };
    cross_check(a, &df, cfg)?;
    Ok(df)
}

/// Explicit coordinate formulas for all faces at all three levels, compared
/// pointwise with the generic maps.
fn cross_check(a: &TwoCrossedModule, df: &DoubleFaces, cfg: &ProbeConfig) -> Result<()> {
    let ic = &df.inner.carriers;
    let fail = |face: usize, level: usize, t: &Element| {
        Err(GroupError::MapMismatch(format!(
            "double-path face d{face} at level {level} disagrees with the explicit formula \
             at {:?}",
            t
        )))
    };

    // Level 2: (k,l,k',l').
    for t in df.outer.carriers.gr2.probe(cfg) {
        let (kl, kl2) = df.outer.carriers.un2(&t);
        let (k, l) = ic.un2(&kl);
        let (k2, l2) = ic.un2(&kl2);
        let explicit = [
            ic.pk2(&k.mul(&l), &k2.mul(&l2)),
            ic.pk2(&k.mul(&k2), &k2.inv().mul(&l).mul(&k2).mul(&l2)),
            ic.pk2(&k, &l),
            ic.pk2(&k, &k2),
        ];
        for (i, want) in explicit.iter().enumerate() {
            if &df.faces[i].mu.apply(&t) != want {
                return fail(i, 2, &t);
            }
        }
    }

    // Level 1: (a,e,k,a',e',k',l,l').
    for t in df.outer.carriers.gr1.probe(cfg) {
        let (av, ev, kv, a2, e2, k2, l, l2) = df.un1(&t);
        let explicit = [
            ic.pk1(
                &av.mul(&ev).mul(&a.delta.apply(&kv)),
                &a2.mul(&e2).mul(&a.delta.apply(&k2)),
                &l.mul(&l2),
            ),
            ic.pk1(&av, &ev, &kv)
                .mul(&ic.pk1(&a2, &e2, &k2))
                .mul(&ic.pk1(&a.delta.apply(&l), &a.e.id(), &l2)),
            ic.pk1(&av, &ev, &kv),
            ic.pk1(&av, &a2, &l),
        ];
        for (i, want) in explicit.iter().enumerate() {
            if &df.faces[i].psi.apply(&t) != want {
                return fail(i, 1, &t);
            }
        }
    }

    // Level 0: (g,x,a,e,k).
    for t in df.outer.carriers.gr0.probe(cfg) {
        let (g, x, av, ev, kv) = df.un0(&t);
        let da = a.bdry.apply(&av);
        let explicit = [
            ic.pk0(&g.mul(&a.bdry.apply(&x)), &av.mul(&ev).mul(&a.delta.apply(&kv))),
            ic.pk0(&g.mul(&da), &a.act_e.act(&da.inv(), &x).mul(&ev)),
            ic.pk0(&g, &x),
            ic.pk0(&g, &av),
        ];
        for (i, want) in explicit.iter().enumerate() {
            if &df.faces[i].phi.apply(&t) != want {
                return fail(i, 0, &t);
            }
        }
    }
    Ok(())
}
