use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word position beyond the truncation horizon of an arithmetic range
    /// map was touched. Values past the horizon are not the true arithmetic
    /// values, so the operation is refused instead of silently using the tail.
    #[error("word of length {len} exceeds the truncation horizon {horizon}")]
    HorizonExceeded { len: usize, horizon: usize },

    /// Composition slot outside `[1, size]`.
    #[error("slot {slot} out of range for an operand of size {size}")]
    SlotOutOfRange { slot: usize, size: usize },

    /// Two words that must have equal lengths do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// The Möbius function was asked for a pair that is not ordered.
    #[error("words are not comparable in the componentwise order")]
    NotComparable,

    /// `domination_index` on a range map that is not 1-dominated.
    #[error("range map is not 1-dominated")]
    NotDominated,

    /// Operad contexts exist only for unimodal range maps. The message
    /// carries an explicit escape witness: a word outside the cliff family
    /// whose composition with a run of zeros lands back inside it.
    #[error(
        "range map {delta} is not unimodal: the complement span is not an \
         operad ideal, since E_{u} o_1 E_{v} = E_{w} with {u} outside and \
         {w} inside the cliff family"
    )]
    NotUnimodal {
        delta: String,
        u: String,
        v: String,
        w: String,
    },

    /// A word failed cliff validation on element construction.
    #[error("word {word} is not a cliff of the ambient range map")]
    NotACliff { word: String },

    /// Mixed-basis or mixed-arity formal sums are rejected.
    #[error("operad elements are in different bases")]
    BasisMismatch,

    /// Arity-homogeneity violation on element construction.
    #[error("term of size {found} in an element of arity {expected}")]
    ArityMismatch { expected: usize, found: usize },

    /// An interval support grew past the configured expansion limit.
    #[error("interval support of {size} terms exceeds the expansion limit {limit}")]
    ExpansionLimitExceeded { size: u128, limit: u128 },

    /// The quotient construction needs a set closed by subword reduction.
    #[error("set is not closed by subword reduction: subword of {word} reduces to {reduced} outside the set")]
    NotClosedBySubwordReduction { word: String, reduced: String },

    /// E- and H-bases of a quotient need the sublattice closed forms.
    #[error("quotient has no sublattice closed forms; only the F-basis is available")]
    NoClosedForms,

    /// Meet or join of two members escaped the set.
    #[error("set is not a sublattice: {op} of {left} and {right} is outside the set")]
    NotASublattice {
        op: &'static str,
        left: String,
        right: String,
    },

    /// A relation-profile run hit its time budget; partial rows were kept.
    #[error("time budget exceeded after arity {last_completed}")]
    TimeBudgetExceeded { last_completed: usize },

    /// Input to `to_composition` has a letter other than 0 or 1.
    #[error("word {word} is not binary")]
    NotBinaryWord { word: String },

    /// A composition part must be a positive integer.
    #[error("composition has an empty part")]
    EmptyPart,

    /// One-line input is not a permutation of 1..k.
    #[error("sequence is not a permutation")]
    NotAPermutation,

    /// A labeled tree does not satisfy the increasing-tree shape rules.
    #[error("malformed increasing tree: {reason}")]
    MalformedTree { reason: String },

    /// A word expected to be weakly increasing is not.
    #[error("word {word} is not a hill")]
    NotAHill { word: String },

    /// A rectangular path does not end at the expected corner.
    #[error("path ends at ({x}, {y}) instead of ({want_x}, {want_y})")]
    BadEndpoint {
        x: usize,
        y: usize,
        want_x: usize,
        want_y: usize,
    },

    /// A Dyck path dips below the x-axis.
    #[error("path falls below the x-axis at step {step}")]
    PathBelowAxis { step: usize },

    /// Text input that does not match a grammar.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
