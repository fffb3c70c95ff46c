//! The disk space `𝒟(A)`: a 2-crossed module
//! `L⋉L → (E⋉(E⋉L))⋉L → (G⋉E)⋉L` that embeds into the double path space
//! with image inside the triangle space.
//!
//! Level 0 acts on `L` by `(g,e) • k = g ▷ (e ▷′ k)` and level 1 acts by
//! `(a,e,k) * l = ∂(a) ▷ (e ▷′ l)`. The action of level 0 on level 1 is
//! assembled from the two special cases
//!
//! * `(g,e) □ (a,f,l,l′) = ((g,e) • (a,f,l), g ▷ (e ▷′ l′))`,
//! * `k □ (a,f,l,l′) = (a, f, l, (f⁻¹ ▷′ (∂(a)⁻¹ ▷ k)) · l′ · k⁻¹)`
//!
//! via the decomposition `(g,e,k) = (g,e,1)(1,1,k)`, and the Peiffer lifting
//! is inherited from the path space.

use group_kernel::{Element, Group, GroupError, Hom, LeftAction, ProbeConfig, Result};
use xmod_core::{Lifting, TwoCrossedModule, XModMorphism};

use crate::bundle::{path_space, PathSpaceBundle};
use crate::carriers::sd;

/// The disk space of a 2-crossed module with its embedding and faces.
pub struct DiskSpace {
    /// The path space `𝒫(A)` of the base.
    pub inner: PathSpaceBundle,
    /// The double path space `𝒫(𝒫(A))`, the embedding target.
    pub outer: PathSpaceBundle,
    /// The disk-space 2-crossed module.
    pub total: TwoCrossedModule,
    /// Levelwise embedding into the double path space:
    /// `(g,x,k) ↦ (g,x,1,δk,k⁻¹)`, `(a,e,k,l) ↦ (a,e,k,1,δl,l⁻¹,1,1)`,
    /// `(k,l) ↦ (k,l,1,1)`.
    pub embed: XModMorphism,
    /// Face `d2 = (p,q,r)` with `q(a,e,k,l) = (a,e,k)`, `r(g,e,k) = (g,e)`.
    pub d2: XModMorphism,
    /// Face `d1 = (p′,q′,r′)` with `q′(a,e,k,l) = (a, eδ(l), l⁻¹k)`,
    /// `r′(g,e,k) = (g, eδ(k))`.
    pub d1: XModMorphism,
}

impl DiskSpace {
    /// Packs a level-1 element `((a,e,k), l)`.
    pub fn pk1(&self, aek: &Element, l: &Element) -> Element {
        self.total.e.pair(aek, l)
    }

    /// Packs a level-0 element `((g,x), k)`.
    pub fn pk0(&self, gx: &Element, k: &Element) -> Element {
        self.total.g.pair(gx, k)
    }

    /// Components of a level-1 element.
    pub fn un1(&self, t: &Element) -> (Element, Element) {
        (t.first(&self.inner.carriers.gr1), t.second(&self.inner.carriers.base.l))
    }

    /// Components of a level-0 element.
    pub fn un0(&self, t: &Element) -> (Element, Element) {
        (t.first(&self.inner.carriers.gr0), t.second(&self.inner.carriers.base.l))
    }
}

/// Builds the disk space of `a`, verifying on probe sets that the two faces
/// agree with the compositions `pr∘embed` through the double path space; a
/// mismatch is a hard error.
pub fn disk_space(a: &TwoCrossedModule, cfg: &ProbeConfig) -> Result<DiskSpace> {
    let inner = path_space(a);
    let outer = path_space(&inner.total);
    let ic = inner.carriers.clone();

    // Level-1 action on L: (a,e,k) * l = ∂(a) ▷ (e ▷′ l).
    let star = LeftAction::from_fn(&ic.gr1, &a.l, {
        let (ic, xm) = (ic.clone(), a.clone());
        move |aek, l| {
            let (av, e, _) = ic.un1(aek);
            xm.act_l.act(&xm.bdry.apply(&av), &xm.secondary_action(&e, l))
        }
    });
    // Level-0 action on L: (g,e) • k = g ▷ (e ▷′ k).
    let bullet = LeftAction::from_fn(&ic.gr0, &a.l, {
        let (ic, xm) = (ic.clone(), a.clone());
        move |gx, k| {
            let (g, x) = ic.un0(gx);
            xm.act_l.act(&g, &xm.secondary_action(&x, k))
        }
    });

    let d_gr1 = sd("⋉*", &star);
    let d_gr0 = sd("⋉•", &bullet);

    let delta = Hom::from_fn(&ic.gr2, &d_gr1, {
        let (ic, d_gr1, xm) = (ic.clone(), d_gr1.clone(), a.clone());
        move |kl| {
            let (k, l) = ic.un2(kl);
            d_gr1.pair(&ic.pk1(&xm.delta.apply(&k), &xm.e.id(), &l), &xm.l.id())
        }
    });
    let bdry = Hom::from_fn(&d_gr1, &d_gr0, {
        let (ic, d_gr0, xm) = (ic.clone(), d_gr0.clone(), a.clone());
        move |t| {
            let aek = t.first(&ic.gr1);
            let l = t.second(&xm.l);
            let (av, e, _) = ic.un1(&aek);
            d_gr0.pair(&ic.pk0(&xm.bdry.apply(&av), &e), &l)
        }
    });

    // The action □ of level 0 on level 1, by decomposition.
    let box_e = LeftAction::from_fn(&d_gr0, &d_gr1, {
        let (ic, d_gr1, xm, lifted) = (ic.clone(), d_gr1.clone(), a.clone(), inner.total.act_e.clone());
        move |s, t| {
            let gx = s.first(&ic.gr0);
            let k = s.second(&xm.l);
            let aek = t.first(&ic.gr1);
            let lp = t.second(&xm.l);
            let (av, f, _) = ic.un1(&aek);
            // (1,1,k) □ (a,f,·,l′).
            let lp = xm
                .secondary_action(&f.inv(), &xm.act_l.act(&xm.bdry.apply(&av).inv(), &k))
                .mul(&lp)
                .mul(&k.inv());
            // (g,x,1) □ the result.
            let (g, x) = ic.un0(&gx);
            d_gr1.pair(
                &lifted.act(&gx, &aek),
                &xm.act_l.act(&g, &xm.secondary_action(&x, &lp)),
            )
        }
    });
    // Level 0 on level 2: (g,e,k) □ (k′,l′) = second lifted action of (g,e).
    let box_l = LeftAction::from_fn(&d_gr0, &ic.gr2, {
        let (ic, lifted2) = (ic.clone(), inner.total.act_l.clone());
        move |s, t| lifted2.act(&s.first(&ic.gr0), t)
    });

    // Lifting inherited from the path space on the first coordinates.
    let lift = Lifting::from_fn(&d_gr1, &ic.gr2, {
        let (ic, plift) = (ic.clone(), inner.total.lift.clone());
        move |x, y| plift.lift(&x.first(&ic.gr1), &y.first(&ic.gr1))
    });

    let total = TwoCrossedModule::new(&format!("D({})", a.name), delta, bdry, box_e, box_l, lift);

    let oc = &outer.carriers;
    let embed = XModMorphism::new(
        &total,
        &outer.total,
        Hom::from_fn(&ic.gr2, &oc.gr2, {
            let (ic, oc) = (ic.clone(), oc.clone());
            move |t| oc.pk2(t, &ic.gr2.id())
        }),
        Hom::from_fn(&d_gr1, &oc.gr1, {
            let (ic, oc, xm) = (ic.clone(), oc.clone(), a.clone());
            move |t| {
                let aek = t.first(&ic.gr1);
                let l = t.second(&xm.l);
                oc.pk1(
                    &aek,
                    &ic.pk1(&xm.e.id(), &xm.delta.apply(&l), &l.inv()),
                    &ic.pk2(&xm.l.id(), &xm.l.id()),
                )
            }
        }),
        Hom::from_fn(&d_gr0, &oc.gr0, {
            let (ic, oc, xm) = (ic.clone(), oc.clone(), a.clone());
            move |t| {
                let gx = t.first(&ic.gr0);
                let k = t.second(&xm.l);
                oc.pk0(&gx, &ic.pk1(&xm.e.id(), &xm.delta.apply(&k), &k.inv()))
            }
        }),
    );

    let d2 = XModMorphism::new(
        &total,
        &inner.total,
        Hom::identity(&ic.gr2),
        Hom::from_fn(&d_gr1, &ic.gr1, {
            let ic = ic.clone();
            move |t| t.first(&ic.gr1)
        }),
        Hom::from_fn(&d_gr0, &ic.gr0, {
            let ic = ic.clone();
            move |t| t.first(&ic.gr0)
        }),
    );
    let d1 = XModMorphism::new(
        &total,
        &inner.total,
        Hom::identity(&ic.gr2),
        Hom::from_fn(&d_gr1, &ic.gr1, {
            let (ic, xm) = (ic.clone(), a.clone());
            move |t| {
                let (av, e, k) = ic.un1(&t.first(&ic.gr1));
                let l = t.second(&xm.l);
                ic.pk1(&av, &e.mul(&xm.delta.apply(&l)), &l.inv().mul(&k))
            }
        }),
        Hom::from_fn(&d_gr0, &ic.gr0, {
            let (ic, xm) = (ic.clone(), a.clone());
            move |t| {
                let (g, x) = ic.un0(&t.first(&ic.gr0));
                let k = t.second(&xm.l);
                ic.pk0(&g, &x.mul(&xm.delta.apply(&k)))
            }
        }),
    );

    let ds = DiskSpace { inner, outer, total, embed, d2, d1 };
    cross_check_faces(&ds, cfg)?;
    Ok(ds)
}

/// Verifies on probes that `d2` and `d1` agree with `pr0 ∘ embed` and
/// `pr1 ∘ embed` through the double path space, levelwise.
fn cross_check_faces(ds: &DiskSpace, cfg: &ProbeConfig) -> Result<()> {
    let checks: [(&str, &XModMorphism, &XModMorphism); 2] =
        [("d2 = pr0∘embed", &ds.d2, &ds.outer.pr0), ("d1 = pr1∘embed", &ds.d1, &ds.outer.pr1)];
    for (label, face, proj) in checks {
        let level: [(&Hom, &Hom, &Hom, &Group); 3] = [
            (&face.mu, &ds.embed.mu, &proj.mu, &ds.total.l),
            (&face.psi, &ds.embed.psi, &proj.psi, &ds.total.e),
            (&face.phi, &ds.embed.phi, &proj.phi, &ds.total.g),
        ];
        for (direct, emb, pr, dom) in level {
            for t in dom.probe(cfg) {
                if direct.apply(&t) != pr.apply(&emb.apply(&t)) {
                    return Err(GroupError::MapMismatch(format!(
                        "disk face {label} disagrees with the composition at {t:?}"
                    )));
                }
            }
        }
    }
    Ok(())
}
