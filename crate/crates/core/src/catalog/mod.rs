//! Named counting functions, each bound to the [`ClassSpec`] it counts.
//!
//! Every class is registered under a stable string id such as
//! `omega_12`, `alpha_star_02` or `theta_bar_star_31`. A class carries the
//! formula as published; where that formula disagrees with the oracle, a
//! corrected evaluator is registered alongside it and selected by
//! [`Mode::ErrataCorrected`].

mod alpha;
mod beta;
mod memo;
mod omega;
mod theta;
mod two_cover;

pub use alpha::{alpha, alpha_bar, alpha_bar_star, alpha_star};
pub use beta::{
    beta, beta_01_printed, beta_41_simple, beta_41_simple_printed, beta_star, beta_star_02_closed, mu, mu_star_01_closed,
    MuVariant,
};
pub use omega::{omega, omega_bar_star_0, omega_bbar_star_1, omega_star};
pub use theta::{theta, theta_bar, theta_bar_star, theta_star, theta_star_partition};
pub use two_cover::{two_cover, TwoCover};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::exactmath::Count;
use crate::hypercore::ClassSpec;
use crate::RowConvention;

/// Which evaluator a class answers with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// The formula as published.
    AsPrinted,
    /// The oracle-consistent correction where one is registered.
    ErrataCorrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Alpha,
    AlphaBar,
    Beta,
    BetaBar,
    BetaBbar,
    Mu,
    MuBar,
    Theta,
    ThetaBar,
    ThetaBarCirc,
    ThetaBbarCirc,
    Omega,
    OmegaBar,
    OmegaBbar,
}

impl Family {
    const ALL: [Family; 14] = [
        Family::Alpha,
        Family::AlphaBar,
        Family::Beta,
        Family::BetaBar,
        Family::BetaBbar,
        Family::Mu,
        Family::MuBar,
        Family::Theta,
        Family::ThetaBar,
        Family::ThetaBarCirc,
        Family::ThetaBbarCirc,
        Family::Omega,
        Family::OmegaBar,
        Family::OmegaBbar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Alpha => "alpha",
            Family::AlphaBar => "alpha_bar",
            Family::Beta => "beta",
            Family::BetaBar => "beta_bar",
            Family::BetaBbar => "beta_bbar",
            Family::Mu => "mu",
            Family::MuBar => "mu_bar",
            Family::Theta => "theta",
            Family::ThetaBar => "theta_bar",
            Family::ThetaBarCirc => "theta_bar_circ",
            Family::ThetaBbarCirc => "theta_bbar_circ",
            Family::Omega => "omega",
            Family::OmegaBar => "omega_bar",
            Family::OmegaBbar => "omega_bbar",
        }
    }
}

/// Structured form of a class id: `<family>[_star]_<i><j>[_as_printed]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassId {
    pub family: Family,
    pub index: usize,
    pub conv: RowConvention,
    pub t0: bool,
    /// A published formula kept next to the standard evaluator of the same class.
    pub as_printed: bool,
}

impl ClassId {
    pub fn new(family: Family, index: usize, conv: RowConvention, t0: bool) -> Self {
        Self {
            family,
            index,
            conv,
            t0,
            as_printed: false,
        }
    }

    pub fn printed(mut self) -> Self {
        self.as_printed = true;
        self
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        if self.t0 {
            f.write_str("_star")?;
        }
        write!(f, "_{}{}", self.index, self.conv)?;
        if self.as_printed {
            f.write_str("_as_printed")?;
        }
        Ok(())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownClass(s.to_string());
        let (body, as_printed) = match s.strip_suffix("_as_printed") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (head, digits) = body.rsplit_once('_').ok_or_else(unknown)?;
        let mut chars = digits.chars();
        let (Some(i), Some(j), None) = (chars.next(), chars.next(), chars.next()) else {
            return Err(unknown());
        };
        let index = i.to_digit(10).ok_or_else(unknown)? as usize;
        let conv = j
            .to_digit(10)
            .and_then(|j| RowConvention::from_index(j as usize))
            .ok_or_else(unknown)?;
        let (name, t0) = match head.strip_suffix("_star") {
            Some(n) => (n, true),
            None => (head, false),
        };
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(unknown)?;
        Ok(Self {
            family,
            index,
            conv,
            t0,
            as_printed,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrataStatus {
    ConfirmedTypo,
    ConventionGap,
    Unresolved,
}

impl ErrataStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrataStatus::ConfirmedTypo => "confirmed-typo",
            ErrataStatus::ConventionGap => "convention-gap",
            ErrataStatus::Unresolved => "unresolved",
        }
    }
}

impl fmt::Display for ErrataStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why a registered correction differs from the published formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrataKind {
    /// A misprinted index, sign, bound or label.
    Typo,
    /// A boundary convention (`n = 1` connectivity, empty-family values).
    Convention,
}

/// One formula-vs-oracle disagreement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrataRecord {
    pub class_id: String,
    pub m: usize,
    pub n: usize,
    pub k: Option<usize>,
    pub formula_value: Count,
    pub oracle_value: Count,
    pub paper_ref_text: String,
    pub status: ErrataStatus,
}

pub type Evaluator = Arc<dyn Fn(usize, usize, Option<usize>) -> Result<Count> + Send + Sync>;

/// A registered class.
pub struct ClassEntry {
    pub id: String,
    pub class_id: ClassId,
    pub conv: RowConvention,
    /// The published formula this class is evaluated from.
    pub citation: String,
    pub description: String,
    template: ClassSpec,
    /// `k` baked into the class (e.g. 2-covers).
    pub fixed_k: Option<usize>,
    printed: Option<Evaluator>,
    corrected: Option<Evaluator>,
    pub errata_kind: Option<ErrataKind>,
    /// What the correction changes, in words.
    pub correction_note: Option<String>,
}

impl fmt::Debug for ClassEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassEntry")
            .field("id", &self.id)
            .field("citation", &self.citation)
            .field("fixed_k", &self.fixed_k)
            .field("has_printed", &self.printed.is_some())
            .field("has_corrected", &self.corrected.is_some())
            .finish()
    }
}

impl ClassEntry {
    pub(crate) fn new(class_id: ClassId, citation: impl Into<String>, description: impl Into<String>, template: ClassSpec) -> Self {
        Self {
            id: class_id.to_string(),
            class_id,
            conv: class_id.conv,
            citation: citation.into(),
            description: description.into(),
            template,
            fixed_k: None,
            printed: None,
            corrected: None,
            errata_kind: None,
            correction_note: None,
        }
    }

    pub(crate) fn formula(mut self, f: impl Fn(usize, usize, Option<usize>) -> Result<Count> + Send + Sync + 'static) -> Self {
        self.printed = Some(Arc::new(f));
        self
    }

    pub(crate) fn correction(
        mut self,
        kind: ErrataKind,
        note: impl Into<String>,
        f: impl Fn(usize, usize, Option<usize>) -> Result<Count> + Send + Sync + 'static,
    ) -> Self {
        self.corrected = Some(Arc::new(f));
        self.errata_kind = Some(kind);
        self.correction_note = Some(note.into());
        self
    }

    pub(crate) fn with_fixed_k(mut self, k: usize) -> Self {
        self.fixed_k = Some(k);
        self
    }

    /// Whether a caller must supply `k`.
    pub fn needs_k(&self) -> bool {
        self.template.needs_k() && self.fixed_k.is_none()
    }

    pub fn is_oracle_only(&self) -> bool {
        self.printed.is_none() && self.corrected.is_none()
    }

    pub fn has_correction(&self) -> bool {
        self.corrected.is_some()
    }

    fn evaluator(&self, mode: Mode) -> Option<&Evaluator> {
        match mode {
            Mode::AsPrinted => self.printed.as_ref(),
            Mode::ErrataCorrected => self.corrected.as_ref().or(self.printed.as_ref()),
        }
    }

    pub fn has_formula(&self, mode: Mode) -> bool {
        self.evaluator(mode).is_some()
    }

    fn effective_k(&self, k: Option<usize>) -> Result<Option<usize>> {
        match (self.fixed_k, self.template.needs_k()) {
            (Some(fixed), _) => Ok(Some(fixed)),
            (None, false) => Ok(None),
            (None, true) => k.map(Some).ok_or_else(|| Error::MissingClassK(self.id.clone())),
        }
    }

    /// The oracle's class at `k`.
    pub fn spec(&self, k: Option<usize>) -> Result<ClassSpec> {
        Ok(match self.effective_k(k)? {
            Some(k) if self.template.needs_k() => self.template.clone().with_k(k),
            _ => self.template.clone(),
        })
    }

    pub fn template(&self) -> &ClassSpec {
        &self.template
    }

    pub fn evaluate(&self, mode: Mode, m: usize, n: usize, k: Option<usize>) -> Result<Count> {
        let f = self.evaluator(mode).ok_or_else(|| Error::OracleOnly(self.id.clone()))?;
        f(m, n, self.effective_k(k)?)
    }

    /// Status of a published-formula mismatch given the oracle value.
    pub fn classify(&self, m: usize, n: usize, k: Option<usize>, oracle: &Count) -> Result<ErrataStatus> {
        let Some(fix) = &self.corrected else {
            return Ok(ErrataStatus::Unresolved);
        };
        if &fix(m, n, self.effective_k(k)?)? != oracle {
            return Ok(ErrataStatus::Unresolved);
        }
        Ok(match self.errata_kind {
            Some(ErrataKind::Convention) => ErrataStatus::ConventionGap,
            _ => ErrataStatus::ConfirmedTypo,
        })
    }
}

pub struct Registry {
    entries: Vec<ClassEntry>,
    index: HashMap<String, usize>,
}

impl Registry {
    fn build() -> Self {
        let mut entries = Vec::new();
        alpha::register(&mut entries);
        beta::register(&mut entries);
        theta::register(&mut entries);
        two_cover::register(&mut entries);
        omega::register(&mut entries);
        let mut index = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            let previous = index.insert(e.id.clone(), i);
            assert!(previous.is_none(), "duplicate class id {}", e.id);
        }
        Self { entries, index }
    }

    pub fn entries(&self) -> &[ClassEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&ClassEntry> {
        self.index.get(id).map(|&i| &self.entries[i])
    }
}

pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::build)
}

/// Looks up a registered class by id.
pub fn resolve_class(id: &str) -> Result<&'static ClassEntry> {
    id.parse::<ClassId>()?;
    registry().get(id).ok_or_else(|| Error::UnknownClass(id.to_string()))
}

pub(crate) fn k_of(k: Option<usize>) -> Result<usize> {
    k.ok_or_else(|| Error::InvalidArgument("k is required".into()))
}
