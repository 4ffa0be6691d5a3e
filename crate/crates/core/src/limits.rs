/// Size caps shared by the field, scan and group code.
///
/// Every exhaustive routine checks its input against one of these before
/// doing any work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest field cardinality whose elements may be enumerated.
    pub enumeration_cap: u64,
    /// Largest field cardinality that may be constructed at all.
    pub arithmetic_cap: u64,
    /// Largest group that may be closed.
    pub group_cap: usize,
    /// Largest group for which conjugacy data and general subgroup searches run.
    pub class_cap: usize,
    /// Largest number of subspaces an invariant-subspace scan may visit.
    pub subspace_cap: u64,
}

impl Limits {
    pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;
    pub const DEFAULT_ARITHMETIC_CAP: u64 = 1 << 48;
    pub const DEFAULT_GROUP_CAP: usize = 1 << 20;
    pub const DEFAULT_CLASS_CAP: usize = 10_000;
    pub const DEFAULT_SUBSPACE_CAP: u64 = 1 << 24;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: Self::DEFAULT_ENUMERATION_CAP,
            arithmetic_cap: Self::DEFAULT_ARITHMETIC_CAP,
            group_cap: Self::DEFAULT_GROUP_CAP,
            class_cap: Self::DEFAULT_CLASS_CAP,
            subspace_cap: Self::DEFAULT_SUBSPACE_CAP,
        }
    }
}
