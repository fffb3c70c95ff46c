//! Per-target cached carriers.
//!
//! Every operation on homotopies into a fixed 2-crossed module `A′` needs
//! the same handful of derived carriers: the path space `P(A′)` (whose level
//! 0 is the semidirect product `G′ ⋉ E′` used to extend derivations), the
//! double path space `P(P(A′))` (the ambient carrier for the authoritative
//! homomorphic computation of `ω`), and the level-0 disk carrier
//! `(G′ ⋉ E′) ⋉ L′` used to extend 2-fold derivations. These are pure
//! functions of the target, so they are built once per thread and cached by
//! target name.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use group_kernel::{Group, LeftAction};
use path_spaces::{path_space, PathSpaceBundle};
use xmod_core::TwoCrossedModule;

use crate::error::Result;

/// Derived carriers of a fixed target module.
pub(crate) struct TargetCtx {
    /// The target module itself.
    pub a2: TwoCrossedModule,
    /// Its path space.
    pub p: PathSpaceBundle,
    /// The double path space, ambient for `ω`.
    pub pp: PathSpaceBundle,
    /// Level 0 of the disk space: `(G′ ⋉ E′) ⋉ L′` along
    /// `(g,e) • k = g ▷ (e ▷′ k)`.
    pub disk0: Group,
}

impl TargetCtx {
    fn build(a2: &TwoCrossedModule) -> Result<TargetCtx> {
        let p = path_space(a2);
        let pp = path_space(&p.total);
        let carriers = p.carriers.clone();
        let base = a2.clone();
        let bullet = LeftAction::from_fn(&p.total.g, &a2.l, move |gx, k| {
            let (g, x) = carriers.un0(gx);
            base.act_l.act(&g, &base.secondary_action(&x, k))
        });
        let disk0 = Group::semidirect_named(&format!("Disk0({})", a2.name), &bullet)?;
        Ok(TargetCtx { a2: a2.clone(), p, pp, disk0 })
    }
}

thread_local! {
    static REGISTRY: RefCell<HashMap<String, Rc<TargetCtx>>> = RefCell::new(HashMap::new());
}

/// Fetches (building on first use) the cached carriers for `a2`.
///
/// Keyed by module name: two modules with the same name are assumed equal,
/// which holds for every carrier in this workspace.
pub(crate) fn context_for(a2: &TwoCrossedModule) -> Result<Rc<TargetCtx>> {
    REGISTRY.with(|reg| {
        if let Some(ctx) = reg.borrow().get(&a2.name) {
            return Ok(ctx.clone());
        }
        let ctx = Rc::new(TargetCtx::build(a2)?);
        reg.borrow_mut().insert(a2.name.clone(), ctx.clone());
        Ok(ctx)
    })
}
