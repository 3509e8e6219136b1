//! Matching a three-qubit splitting profile against link cut-profiles.
//!
//! A measured qubit plays the role of a cut ring, and a residual Schmidt rank
//! of at least 2 plays the role of the remaining pair staying linked. Only
//! outcomes that can occur are considered.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::links::{LinkKind, LinkModel};
use crate::profile::{SplittingEntry, SplittingProfile};
use crate::state::{label_serde, qubit_label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Analogue {
    Hopf3,
    Borromean,
    Chain3,
    Unclassified,
}

impl From<LinkKind> for Analogue {
    fn from(kind: LinkKind) -> Self {
        match kind {
            LinkKind::Hopf3 => Analogue::Hopf3,
            LinkKind::Borromean => Analogue::Borromean,
            LinkKind::Chain3 => Analogue::Chain3,
        }
    }
}

impl fmt::Display for Analogue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Analogue::Hopf3 => "HOPF3",
            Analogue::Borromean => "BORROMEAN",
            Analogue::Chain3 => "CHAIN3",
            Analogue::Unclassified => "UNCLASSIFIED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub primary_analogue: Analogue,
    /// Central qubit, only for [`Analogue::Chain3`].
    #[serde(with = "label_serde::option")]
    pub center: Option<usize>,
    /// Outer-qubit outcomes that leave the other two separable.
    #[serde(with = "label_serde::outcomes")]
    pub borromean_outcomes: Vec<(usize, u8)>,
    pub notes: Vec<String>,
}

/// How the outcomes of one measured qubit combine into a linked/unlinked verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CutSemantics {
    /// Linked if any possible outcome leaves the others entangled.
    #[default]
    Possibilistic,
    /// Linked only if every possible outcome does.
    Necessitarian,
}

impl fmt::Display for CutSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CutSemantics::Possibilistic => "possibilistic",
            CutSemantics::Necessitarian => "necessitarian",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutMismatch {
    #[serde(with = "label_serde")]
    pub qubit: usize,
    #[serde(with = "label_serde")]
    pub component: usize,
    pub quantum_linked: bool,
    pub model_linked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub model: String,
    pub semantics: CutSemantics,
    pub consistent: bool,
    pub mismatches: Vec<CutMismatch>,
}

fn check_arity(profile: &SplittingProfile) -> Result<()> {
    if profile.num_qubits != 3 {
        return Err(Error::WrongArity(profile.num_qubits));
    }
    Ok(())
}

fn possible(profile: &SplittingProfile, qubit: usize) -> impl Iterator<Item = &SplittingEntry> {
    profile.entries_for(qubit).filter(|e| e.is_possible())
}

fn entry_note(e: &SplittingEntry) -> String {
    let head = format!("{}|{}>", qubit_label(e.qubit), e.outcome);
    match (e.rank, &e.gram_eigenvalues) {
        (None, _) => format!("{head}: never occurs"),
        (Some(1), _) => format!("{head}: p={:.6}, rank 1, separable", e.probability),
        (Some(r), Some(gram)) => {
            let spectrum: Vec<String> = gram.iter().take(r).map(|v| format!("{v:.6}")).collect();
            let kind = if e.is_maximal() { "maximal" } else { "non-maximal" };
            format!(
                "{head}: p={:.6}, rank {r}, {kind} (gram {})",
                e.probability,
                spectrum.join(", ")
            )
        }
        (Some(r), None) => format!("{head}: p={:.6}, rank {r}", e.probability),
    }
}

/// Assigns a link analogue to a three-qubit profile.
///
/// Rules, first match wins: every possible outcome entangled gives HOPF3;
/// every possible outcome separable gives BORROMEAN; exactly one qubit whose
/// outcomes are all separable, with every other qubit having some entangled
/// outcome, gives CHAIN3 centred on that qubit; anything else is
/// UNCLASSIFIED.
pub fn classify(profile: &SplittingProfile) -> Result<ClassificationResult> {
    check_arity(profile)?;
    let mut notes: Vec<String> = profile.entries.iter().map(entry_note).collect();

    let live: Vec<&SplittingEntry> = profile.entries.iter().filter(|e| e.is_possible()).collect();
    let all_separable = |q: usize| possible(profile, q).all(|e| !e.is_entangled());
    let any_entangled = |q: usize| possible(profile, q).any(|e| e.is_entangled());

    let mut result = ClassificationResult {
        primary_analogue: Analogue::Unclassified,
        center: None,
        borromean_outcomes: Vec::new(),
        notes: Vec::new(),
    };

    if live.iter().all(|e| e.is_entangled()) {
        result.primary_analogue = Analogue::Hopf3;
    } else if live.iter().all(|e| !e.is_entangled()) {
        result.primary_analogue = Analogue::Borromean;
    } else {
        let centers: Vec<usize> = (0..3).filter(|&q| all_separable(q)).collect();
        match centers.as_slice() {
            &[c] if (0..3).filter(|&q| q != c).all(any_entangled) => {
                result.primary_analogue = Analogue::Chain3;
                result.center = Some(c);
                result.borromean_outcomes = live
                    .iter()
                    .filter(|e| e.qubit != c && !e.is_entangled())
                    .map(|e| (e.qubit, e.outcome))
                    .collect();
                for &(q, o) in &result.borromean_outcomes {
                    notes.push(format!(
                        "{}|{o}> disentangles the remaining pair (Borromean-like outcome)",
                        qubit_label(q)
                    ));
                }
            }
            _ => {
                let separable: Vec<String> = centers.iter().map(|&q| qubit_label(q).to_string()).collect();
                notes.push(format!(
                    "no link model matches: qubits with only separable outcomes = [{}]",
                    separable.join(", ")
                ));
            }
        }
    }
    result.notes = notes;
    Ok(result)
}

/// Whether measuring `qubit` counts as leaving the other two linked.
pub fn quantum_cut_linked(profile: &SplittingProfile, qubit: usize, semantics: CutSemantics) -> bool {
    match semantics {
        CutSemantics::Possibilistic => possible(profile, qubit).any(|e| e.is_entangled()),
        CutSemantics::Necessitarian => {
            let mut outcomes = possible(profile, qubit).peekable();
            outcomes.peek().is_some() && outcomes.all(|e| e.is_entangled())
        }
    }
}

/// Compares the quantum cut verdicts with a link model.
///
/// `qubit_to_component[q]` is the link component standing in for qubit `q`.
pub fn consistency_check(
    profile: &SplittingProfile,
    model: &LinkModel,
    qubit_to_component: &[usize],
    semantics: CutSemantics,
) -> Result<ConsistencyReport> {
    check_arity(profile)?;
    let mut seen = [false; 3];
    if qubit_to_component.len() != 3
        || qubit_to_component
            .iter()
            .any(|&c| c >= 3 || std::mem::replace(&mut seen[c], true))
    {
        return Err(Error::InvalidMapping(format!(
            "{qubit_to_component:?} is not a bijection onto the three components"
        )));
    }
    let mut mismatches = Vec::new();
    for (qubit, &component) in qubit_to_component.iter().enumerate() {
        let quantum_linked = quantum_cut_linked(profile, qubit, semantics);
        let model_linked = model.leaves_linked(component)?;
        if quantum_linked != model_linked {
            mismatches.push(CutMismatch {
                qubit,
                component,
                quantum_linked,
                model_linked,
            });
        }
    }
    Ok(ConsistencyReport {
        model: model.name(),
        semantics,
        consistent: mismatches.is_empty(),
        mismatches,
    })
}
