/// Resource guards for operations whose output can blow up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of words `enumerate` may return.
    pub max_words: usize,
    /// Maximum number of subset states a determinization may create.
    pub max_dfa_states: usize,
}

impl Limits {
    pub const DEFAULT_MAX_WORDS: usize = 100_000;
    pub const DEFAULT_MAX_DFA_STATES: usize = 100_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_words: Self::DEFAULT_MAX_WORDS, max_dfa_states: Self::DEFAULT_MAX_DFA_STATES }
    }
}
