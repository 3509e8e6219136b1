//! Three-component links described only by what happens when one component
//! is cut: which of the remaining pairs are still linked.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LinkKind {
    /// Three rings, each pair Hopf-linked.
    Hopf3,
    /// No pair linked on its own; any cut frees the other two.
    Borromean,
    /// Open chain; only the centre ring touches both others.
    Chain3,
}

impl LinkKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LinkKind::Hopf3 => "HOPF3",
            LinkKind::Borromean => "BORROMEAN",
            LinkKind::Chain3 => "CHAIN3",
        }
    }
}

/// Unordered pair of component indices, stored with the smaller first.
pub type ComponentPair = (usize, usize);

fn pair(a: usize, b: usize) -> ComponentPair {
    (a.min(b), a.max(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkModel {
    pub kind: LinkKind,
    /// Components are `0, 1, 2` (labelled `A, B, C`).
    pub center: Option<usize>,
    cut_profile: BTreeMap<usize, BTreeSet<ComponentPair>>,
}

const COMPONENTS: [usize; 3] = [0, 1, 2];

impl LinkModel {
    pub fn hopf3() -> Self {
        Self::from_rule(LinkKind::Hopf3, None, |_, _| true)
    }

    pub fn borromean() -> Self {
        Self::from_rule(LinkKind::Borromean, None, |_, _| false)
    }

    /// A three-link chain whose middle ring is `center`.
    pub fn chain3(center: usize) -> Result<Self> {
        if center >= 3 {
            return Err(Error::UnknownComponent(center));
        }
        Ok(Self::from_rule(LinkKind::Chain3, Some(center), |cut, _| cut != center))
    }

    /// `linked(cut, remaining_pair)` decides whether the pair survives the cut.
    fn from_rule(kind: LinkKind, center: Option<usize>, linked: impl Fn(usize, ComponentPair) -> bool) -> Self {
        let cut_profile = COMPONENTS
            .iter()
            .map(|&cut| {
                let rest: Vec<usize> = COMPONENTS.iter().copied().filter(|&c| c != cut).collect();
                let remaining = pair(rest[0], rest[1]);
                let set = if linked(cut, remaining) {
                    BTreeSet::from([remaining])
                } else {
                    BTreeSet::new()
                };
                (cut, set)
            })
            .collect();
        Self {
            kind,
            center,
            cut_profile,
        }
    }

    pub fn components(&self) -> [usize; 3] {
        COMPONENTS
    }

    pub fn cut_profile(&self) -> &BTreeMap<usize, BTreeSet<ComponentPair>> {
        &self.cut_profile
    }

    /// True if cutting `component` leaves the other two linked.
    pub fn leaves_linked(&self, component: usize) -> Result<bool> {
        Ok(!cut(self, component)?.is_empty())
    }

    pub fn name(&self) -> String {
        match self.center {
            Some(c) => format!("{}(center={})", self.kind.as_str(), crate::state::qubit_label(c)),
            None => self.kind.as_str().to_owned(),
        }
    }
}

/// Pairs still linked after cutting `component`.
pub fn cut(model: &LinkModel, component: usize) -> Result<BTreeSet<ComponentPair>> {
    model
        .cut_profile
        .get(&component)
        .cloned()
        .ok_or(Error::UnknownComponent(component))
}

/// HOPF3, BORROMEAN and the three CHAIN3 variants.
pub fn standard_models() -> Vec<LinkModel> {
    let mut models = vec![LinkModel::hopf3(), LinkModel::borromean()];
    models.extend(
        COMPONENTS
            .iter()
            .map(|&c| LinkModel::chain3(c).expect("center in range")),
    );
    models
}
