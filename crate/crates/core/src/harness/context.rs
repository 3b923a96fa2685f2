use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::error::ModularError;
use crate::modular::{
    eta_product_expansion, prime_power_coefficient_in, PrimePowerCoefficient, QExpansion, DEFAULT_BUDGET,
};

/// Shared state for a verification run: the eta-product expansion, grown
/// on demand up to the budget.
pub struct Context {
    budget: u64,
    expansion: Mutex<Option<Arc<QExpansion>>>,
}

impl Default for Context {
    fn default() -> Self {
        Context::new(DEFAULT_BUDGET)
    }
}

impl Context {
    pub fn new(budget: u64) -> Self {
        Context { budget, expansion: Mutex::new(None) }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// An expansion covering at least index `n`.
    pub fn expansion_to(&self, n: u64) -> Result<Arc<QExpansion>, ModularError> {
        if n > self.budget {
            return Err(ModularError::BudgetExceeded { requested: n, budget: self.budget });
        }
        let mut slot = self.expansion.lock().expect("expansion cache poisoned");
        if let Some(e) = slot.as_ref().filter(|e| e.bound() >= n) {
            return Ok(Arc::clone(e));
        }
        let e = Arc::new(eta_product_expansion(n.max(1))?);
        *slot = Some(Arc::clone(&e));
        Ok(e)
    }

    pub fn coefficient(&self, n: u64) -> Result<BigInt, ModularError> {
        Ok(self.expansion_to(n)?.coefficient_at(n)?.clone())
    }

    pub fn prime_power_coefficient(&self, p: u64, r: u32) -> Result<PrimePowerCoefficient, ModularError> {
        let index = p
            .checked_pow(r)
            .filter(|&i| i <= self.budget)
            .ok_or(ModularError::BudgetExceeded { requested: p.saturating_pow(r), budget: self.budget })?;
        let e = self.expansion_to(index)?;
        prime_power_coefficient_in(&e, p, r)
    }
}
