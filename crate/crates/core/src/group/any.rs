use alloc::collections::BTreeSet;
use alloc::string::String;

use super::{
    DihedralUniverse, FiniteGroup, GroupInvariants, HeisenbergModule, HeisenbergUniverse, SemidirectUniverse,
    SymmetricUniverse, Universe,
};
use crate::error::GroupError;

/// A closed group from any of the built-in universes.
#[derive(Clone, Debug)]
pub enum AnyGroup {
    Permutation(FiniteGroup<SymmetricUniverse>),
    Dihedral(FiniteGroup<DihedralUniverse>),
    ExtraSpecial(FiniteGroup<HeisenbergUniverse>),
    Semidirect(FiniteGroup<SemidirectUniverse<HeisenbergModule>>),
}

macro_rules! dispatch {
    ($self:expr, $g:ident => $body:expr) => {
        match $self {
            AnyGroup::Permutation($g) => $body,
            AnyGroup::Dihedral($g) => $body,
            AnyGroup::ExtraSpecial($g) => $body,
            AnyGroup::Semidirect($g) => $body,
        }
    };
}

impl AnyGroup {
    pub fn order(&self) -> u64 {
        dispatch!(self, g => g.order() as u64)
    }

    pub fn exponent(&self) -> u64 {
        dispatch!(self, g => g.exponent())
    }

    pub fn describe(&self) -> String {
        dispatch!(self, g => g.universe().describe())
    }

    pub fn permutation_degree(&self) -> Option<usize> {
        dispatch!(self, g => g.universe().permutation_degree())
    }

    pub fn element_orders(&self) -> BTreeSet<u64> {
        dispatch!(self, g => g.element_orders().iter().copied().collect())
    }

    pub fn invariants(&self, class_cap: usize) -> GroupInvariants {
        dispatch!(self, g => g.invariants(class_cap))
    }

    /// Order of the subgroup generated by the elements of `p`-power order.
    pub fn sylow_generated_order(&self, p: u64) -> Result<u64, GroupError> {
        dispatch!(self, g => g.sylow_generated(p).map(|s| s.order() as u64))
    }
}
