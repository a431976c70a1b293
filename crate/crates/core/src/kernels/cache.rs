use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::bilinear::BilinearProgram;
use crate::structures::StructureKind;

type Table = RwLock<HashMap<(StructureKind, usize), Arc<BilinearProgram>>>;

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// Shared program for a dense-structured class of order `n`.
///
/// # Panics
/// For sparse and multilevel kinds, whose programs depend on more than `n`.
pub fn cached_program(kind: StructureKind, n: usize) -> Arc<BilinearProgram> {
    if let Some(p) = table().read().expect("program cache poisoned").get(&(kind, n)) {
        return Arc::clone(p);
    }
    // built outside the lock; a racing builder just produces an equal program
    let built = Arc::new(
        super::build_program(kind, n)
            .unwrap_or_else(|| panic!("no order-only program for {kind}")),
    );
    let mut guard = table().write().expect("program cache poisoned");
    Arc::clone(guard.entry((kind, n)).or_insert(built))
}
