//! Default resource caps.
//!
//! Every potentially expensive operation takes an explicit cap and fails with
//! [`Error::CapExceeded`](crate::Error::CapExceeded) instead of running away.
//! These are the documented defaults used by the convenience wrappers.

/// Cap on full element enumeration (conjugacy classes, brute-force scans).
pub const ELEMENT_CAP: u64 = 1_000_000;

/// Cap on the group order for subgroup-lattice enumeration.
pub const SUBGROUP_ORDER_CAP: u64 = 2_000;

/// Cap on the number of cosets defined during Todd-Coxeter enumeration.
pub const COSET_LIMIT: usize = 100_000;

/// Cap on closure size for matrix and generic group enumeration.
pub const CLOSURE_CAP: usize = 10_000;
