use std::sync::Arc;

use super::cases::standard_cases;
use super::Case;
use crate::error::HarnessError;

/// Named cases in canonical order; lookup ignores ASCII case.
#[derive(Clone, Default)]
pub struct CaseRegistry {
    cases: Vec<Arc<dyn Case>>,
}

impl CaseRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every congruence, exact and series case.
    pub fn standard() -> Self {
        let mut reg = Self::new();
        for case in standard_cases() {
            reg.register(case);
        }
        reg
    }

    /// Adds `case`, replacing any case of the same name in place.
    pub fn register(&mut self, case: Arc<dyn Case>) {
        match self.cases.iter_mut().find(|c| c.name().eq_ignore_ascii_case(case.name())) {
            Some(slot) => *slot = case,
            None => self.cases.push(case),
        }
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn Case>, HarnessError> {
        self.cases
            .iter()
            .find(|c| c.name().eq_ignore_ascii_case(name))
            .cloned()
            .ok_or_else(|| HarnessError::UnknownCase(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.cases.iter().map(|c| c.name()).collect()
    }

    pub fn cases(&self) -> &[Arc<dyn Case>] {
        &self.cases
    }

    /// The named cases in registry order; `"all"` selects everything.
    pub fn select<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<Arc<dyn Case>>, HarnessError> {
        if names.iter().any(|n| n.as_ref().eq_ignore_ascii_case("all")) {
            return Ok(self.cases.clone());
        }
        let mut wanted = Vec::with_capacity(names.len());
        for n in names {
            wanted.push(self.get(n.as_ref())?.name());
        }
        Ok(self.cases.iter().filter(|c| wanted.contains(&c.name())).cloned().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_and_selection() {
        let reg = CaseRegistry::standard();
        assert_eq!(reg.get("thm1").unwrap().name(), "THM1");
        assert_eq!(reg.get("whipple_7f6").unwrap().name(), "WHIPPLE_7F6");
        assert_eq!(reg.get("NOPE").err(), Some(HarnessError::UnknownCase("NOPE".into())));
        let picked: Vec<_> = reg.select(&["THM2", "eq0"]).unwrap().iter().map(|c| c.name()).collect();
        assert_eq!(picked, ["EQ0", "THM2"]);
        assert_eq!(reg.select(&["ALL"]).unwrap().len(), reg.names().len());
        assert_eq!(reg.names().len(), 17 + 11 + 5);
    }
}
