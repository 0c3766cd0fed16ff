//! Critical-pair selection strategies, looked up by name at runtime.

use std::sync::Arc;

/// What a strategy may look at when ranking a critical pair.
#[derive(Clone, Copy, Debug)]
pub struct PairInfo {
    pub lcm_degree: u32,
    pub sugar: u32,
}

/// Ranks critical pairs; the engine processes the smallest rank first and
/// breaks ties by lcm degree, then by basis indices.
pub trait SelectionStrategy: Send + Sync + std::fmt::Debug {
    fn name(&self) -> &'static str;
    fn rank(&self, pair: &PairInfo) -> u32;
}

/// Smallest lcm degree first.
#[derive(Debug, Default)]
pub struct Normal;

impl SelectionStrategy for Normal {
    fn name(&self) -> &'static str {
        "normal"
    }
    fn rank(&self, pair: &PairInfo) -> u32 {
        pair.lcm_degree
    }
}

/// Smallest sugar degree first; behaves like [`Normal`] on homogeneous input
/// and keeps affine eliminations from racing ahead in degree.
#[derive(Debug, Default)]
pub struct Sugar;

impl SelectionStrategy for Sugar {
    fn name(&self) -> &'static str {
        "sugar"
    }
    fn rank(&self, pair: &PairInfo) -> u32 {
        pair.sugar
    }
}

#[derive(Debug, Clone)]
pub struct StrategyRegistry {
    entries: Vec<Arc<dyn SelectionStrategy>>,
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        StrategyRegistry { entries: vec![Arc::new(Normal), Arc::new(Sugar)] }
    }
}

impl StrategyRegistry {
    /// Adds a strategy, replacing any existing one with the same name.
    pub fn register(&mut self, s: Arc<dyn SelectionStrategy>) {
        self.entries.retain(|e| e.name() != s.name());
        self.entries.push(s);
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn SelectionStrategy>> {
        self.entries.iter().find(|e| e.name() == name).cloned()
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }
}

/// Looks a strategy up in the default registry.
pub fn strategy_by_name(name: &str) -> Option<Arc<dyn SelectionStrategy>> {
    StrategyRegistry::default().get(name)
}
