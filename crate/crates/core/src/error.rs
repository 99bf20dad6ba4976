use std::fmt;
use thiserror::Error;

/// Axioms checked when a multiplication is attached to a lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Axiom {
    /// Table entry outside the element range.
    Closure,
    /// `a·b = b·a`
    Commutativity,
    /// `a·(b·c) = (a·b)·c`
    Associativity,
    /// `a·(b∨c) = (a·b)∨(a·c)`
    JoinDistributivity,
    /// `a·0 = 0`, the empty-join case of distributivity.
    ZeroAnnihilation,
    /// `a·1 = a`
    Identity,
    /// `a·b ≤ a∧b`
    BelowMeet,
    /// `a ≤ b ⟹ a·c ≤ b·c`
    Monotonicity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Closure => "closure",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::JoinDistributivity => "join-distributivity",
            Axiom::ZeroAnnihilation => "zero-annihilation",
            Axiom::Identity => "identity",
            Axiom::BelowMeet => "below-meet",
            Axiom::Monotonicity => "monotonicity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an order needs at least one element")]
    EmptyOrder,
    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("antisymmetry violated: {a} ≤ {b} and {b} ≤ {a}")]
    Cycle { a: usize, b: usize },
    #[error("not a lattice: {x} and {y} have no {bound}")]
    NotALattice { x: usize, y: usize, bound: Bound },
    #[error("multiplication table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("axiom {axiom} violated at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },
    #[error("top is join-reducible: {x} ∨ {y} = top")]
    TopJoinReducible { x: usize, y: usize },
    #[error("residual ({i}:{a}) = {residual} breaks adjunction at x = {x}")]
    ResidualMismatch {
        i: usize,
        a: usize,
        residual: usize,
        x: usize,
    },
    #[error("radical of {a}: power formula gives {by_powers}, minimal primes give {by_primes}")]
    RadicalMismatch {
        a: usize,
        by_powers: usize,
        by_primes: usize,
    },
    #[error("operation needs a lattice with more than one element")]
    DegenerateLattice,
    #[error("set must be nonempty")]
    EmptySet,
    #[error("set is not M-closed: {a}·{b} = {product} is missing")]
    NotMClosed { a: usize, b: usize, product: usize },
    #[error("set is not X-multiplicatively closed: {0}")]
    NotXMultClosed(crate::xclass::XMultWitness),
    #[error("precondition violated: {t} ≤ {a}")]
    PreconditionViolated { t: usize, a: usize },
    #[error("maximal avoiding element {i} is not an X-element (witness {witness:?})")]
    ConclusionFailed { i: usize, witness: (usize, usize) },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("ring/lattice disagreement on ideal {ideal} for {class}-classification: ring says {ring}, lattice says {lattice}")]
    CrossValidationMismatch {
        ideal: String,
        class: String,
        ring: bool,
        lattice: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Meet,
    Join,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::Meet => "greatest lower bound",
            Bound::Join => "least upper bound",
        })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
