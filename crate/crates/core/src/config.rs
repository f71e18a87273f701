/// Search caps shared by the conjugacy, classification and centralizer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of elements in a super summit set.
    pub sss_cap: usize,
    /// Generic search budget (filling searches, strand-loop corrections).
    pub budget: usize,
    /// Maximum number of candidates tried by the root search.
    pub root_cap: usize,
    /// Largest strand count for which laminar families are enumerated.
    pub enum_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { sss_cap: 10_000, budget: 10_000, root_cap: 1_000_000, enum_limit: 12 }
    }
}
