//! The deformation parameter and the choice of deformation family.

use std::fmt;

use crate::error::{KappaError, Result};

/// The deformation parameter κ.
///
/// Every function of the library is even in κ, so the sign is dropped at
/// construction and only |κ| is stored. A parameter built with
/// [`KappaParam::physical`] is additionally restricted to |κ| < 1, the range
/// required by the entropy and Γ_κ machinery. [`KappaParam::new`] accepts any
/// finite value so that formal identities using 1/κ remain expressible.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct KappaParam {
    kappa: f64,
    physical: bool,
}

impl KappaParam {
    /// The undeformed parameter κ = 0.
    pub const ZERO: KappaParam = KappaParam {
        kappa: 0.0,
        physical: true,
    };

    pub fn new(kappa: f64) -> Result<Self> {
        if !kappa.is_finite() {
            return Err(KappaError::Input(format!("kappa must be finite, got {kappa}")));
        }
        let kappa = kappa.abs();
        Ok(Self {
            kappa,
            physical: kappa < 1.0,
        })
    }

    /// A parameter in the physical range 0 ≤ |κ| < 1.
    pub fn physical(kappa: f64) -> Result<Self> {
        let k = Self::new(kappa)?;
        if k.kappa >= 1.0 {
            return Err(KappaError::Domain {
                what: "kappa",
                value: kappa,
                domain: "|kappa| < 1".into(),
            });
        }
        Ok(k)
    }

    /// |κ|.
    #[inline]
    pub fn value(self) -> f64 {
        self.kappa
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.kappa == 0.0
    }

    /// True when |κ| < 1.
    #[inline]
    pub fn is_physical(self) -> bool {
        self.physical
    }

    pub(crate) fn require_physical(self, what: &'static str) -> Result<()> {
        if self.physical {
            Ok(())
        } else {
            Err(KappaError::Domain {
                what,
                value: self.kappa,
                domain: "|kappa| < 1".into(),
            })
        }
    }

    /// κ/r, used by the scaling identities exp_κ(x)^r = exp_{κ/r}(rx).
    pub fn scaled(self, r: f64) -> Result<Self> {
        if r == 0.0 {
            return Err(KappaError::Input("scale factor must be nonzero".into()));
        }
        Self::new(self.kappa / r)
    }
}

impl fmt::Display for KappaParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "κ={}", self.kappa)
    }
}

impl TryFrom<f64> for KappaParam {
    type Error = KappaError;

    fn try_from(kappa: f64) -> Result<Self> {
        Self::new(kappa)
    }
}

/// Selects between the hyperbolic (arcsinh-based) and the cyclic
/// (arcsin-based) deformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DeformKind {
    #[default]
    Hyperbolic,
    Cyclic,
}
