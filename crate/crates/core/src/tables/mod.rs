//! Finite magmas, quasigroups and loops as index tables.

mod laws;
mod loops;
mod quasigroup;
mod table;

pub use laws::{check_law, check_law_capped, holds, LawError, LawId, Structure, Violation, DEFAULT_CAP};
pub(crate) use laws::for_all_tuples;
pub(crate) use quasigroup::{invert_columns, invert_rows};
pub use loops::{classify_loop, element_orders, BruckLoopData, BruckTableError, LoopClassification, LoopError};
pub use quasigroup::{
    closure, find_identity, idempotents, is_closed, squaring_map, table_diagonal, DiagonalOf, LeftQuasigroup,
    LoopData, QuasigroupData, QuasigroupError,
};
pub use table::{MulTable, TableError};
