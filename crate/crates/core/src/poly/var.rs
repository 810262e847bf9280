use std::fmt;
use std::sync::Arc;

/// A variable name (`s`, `w`, `g`, or an alphanumeric parameter name).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// Laplace variable.
    pub fn s() -> Self {
        Var::new("s")
    }

    /// Frequency variable.
    pub fn w() -> Self {
        Var::new("w")
    }

    /// Level (singular value) variable.
    pub fn g() -> Self {
        Var::new("g")
    }
}

impl From<&str> for Var {
    fn from(name: &str) -> Self {
        Var::new(name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
