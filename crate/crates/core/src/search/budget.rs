use serde::{Deserialize, Serialize};
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Stop at the first certificate found.
    First,
    /// Return the certificate with the lexicographically least sorted edge
    /// list, ties broken by the normalized leaf cycle.
    CanonicalFirst,
    /// Explore everything, count the feasible leaf sets, and return the
    /// canonical certificate.
    ExhaustiveCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub mode: SearchMode,
}

impl SearchBudget {
    pub fn unlimited(mode: SearchMode) -> Self {
        Self { node_limit: None, time_limit: None, mode }
    }

    pub fn nodes(node_limit: u64, mode: SearchMode) -> Self {
        Self { node_limit: Some(node_limit), time_limit: None, mode }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn is_bounded(&self) -> bool {
        self.node_limit.is_some() || self.time_limit.is_some()
    }
}

/// Three-valued search result. `None` is a proof of nonexistence; `Unknown`
/// only means the budget ran out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    None,
    Unknown,
}

impl<T> Outcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Self::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            Self::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Self::Found(_))
    }

    pub fn is_none(&self) -> bool {
        matches!(self, Self::None)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Self::Unknown)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::Found(_) => "found",
            Self::None => "none",
            Self::Unknown => "unknown",
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Self::Found(t) => Outcome::Found(f(t)),
            Self::None => Outcome::None,
            Self::Unknown => Outcome::Unknown,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport<T> {
    pub outcome: Outcome<T>,
    /// Search-tree nodes visited.
    pub nodes: u64,
    /// Number of feasible leaf sets, reported only by a completed
    /// exhaustive-count search.
    pub solutions: Option<u64>,
}

pub(crate) struct Ticker {
    pub(crate) nodes: u64,
    limit: Option<u64>,
    deadline: Option<Instant>,
    pub(crate) exhausted: bool,
}

impl Ticker {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Self {
            nodes: 0,
            limit: budget.node_limit,
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            exhausted: false,
        }
    }

    /// Counts one node; returns `false` once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        let over_nodes = self.limit.is_some_and(|l| self.nodes > l);
        let over_time = self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        self.exhausted = over_nodes || over_time;
        !self.exhausted
    }
}
