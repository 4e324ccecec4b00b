/// Resource caps and switches shared by every computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest group order for element-by-element enumeration (classes, centers).
    pub enumeration_cap: u128,
    /// Largest permutation degree, including matrix groups acting on vectors.
    pub degree_cap: usize,
    /// Largest index for a quotient realized on cosets.
    pub coset_cap: usize,
    /// Largest number of conjugacy classes for building the normal lattice.
    pub class_cap: usize,
    /// Largest product order decided by a stabilizer chain in independence checks.
    pub product_budget: u128,
    /// Whether the Tits group counts as a characteristic-2 group of Lie type.
    pub tits_group: bool,
    /// Seed for the seeded searches (element sampling, random words).
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enumeration_cap: 10_000_000,
            degree_cap: 100_000,
            coset_cap: 50_000,
            class_cap: 40,
            product_budget: 100_000_000,
            tits_group: true,
            seed: 0x5eed_0001,
        }
    }
}

impl Config {
    pub fn with_class_cap(mut self, cap: usize) -> Self {
        self.class_cap = cap;
        self
    }
}
