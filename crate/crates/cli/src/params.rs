//! `key=value,key=value` parameter lists.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context};
use heunforge::che::CheParams;
use heunforge::heun::{HeunClass, HeunParams};
use heunforge::poly::{parse_scalar, Scalar};

pub struct ParamList<S> {
    values: BTreeMap<String, S>,
}

impl<S: Scalar> ParamList<S> {
    pub fn parse(text: &str, allowed: &[&str]) -> anyhow::Result<Self> {
        let mut values = BTreeMap::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| anyhow!("expected key=value, got `{item}`"))?;
            let k = k.trim().to_ascii_lowercase();
            if !allowed.contains(&k.as_str()) {
                bail!("unknown parameter `{k}` (expected one of {})", allowed.join(", "));
            }
            let v = parse_scalar::<S>(v.trim()).with_context(|| format!("parameter `{k}`"))?;
            if values.insert(k.clone(), v).is_some() {
                bail!("parameter `{k}` given twice");
            }
        }
        Ok(Self { values })
    }

    pub fn get(&self, k: &str) -> Option<S> {
        self.values.get(k).cloned()
    }

    pub fn need(&self, k: &str) -> anyhow::Result<S> {
        self.get(k).ok_or_else(|| anyhow!("missing parameter `{k}`"))
    }
}

const HEUN_KEYS: [&str; 7] = ["gamma", "delta", "epsilon", "alpha", "beta", "q", "a"];
const CHE_KEYS: [&str; 5] = ["alpha", "beta", "gamma", "mu", "nu"];

fn fuchs_epsilon<S: Scalar>(l: &ParamList<S>, alpha: &S, beta: &S) -> anyhow::Result<S> {
    match l.get("epsilon") {
        Some(e) => Ok(e),
        None => Ok(alpha.clone() + beta.clone() - l.need("gamma")? - l.need("delta")? + S::one()),
    }
}

/// Every Heun parameter, epsilon optional.
pub fn heun_full<S: Scalar>(text: &str) -> anyhow::Result<HeunParams<S>> {
    let l = ParamList::<S>::parse(text, &HEUN_KEYS)?;
    let (alpha, beta) = (l.need("alpha")?, l.need("beta")?);
    let epsilon = fuchs_epsilon(&l, &alpha, &beta)?;
    Ok(HeunParams::new(
        l.need("gamma")?,
        l.need("delta")?,
        epsilon,
        alpha,
        beta,
        l.get("q").unwrap_or_else(S::zero),
        l.need("a")?,
    )?)
}

/// Heun parameters for a polynomial of class `class` and degree `n`.
pub fn heun_for_class<S: Scalar>(text: &str, class: HeunClass, n: usize) -> anyhow::Result<HeunParams<S>> {
    let l = ParamList::<S>::parse(text, &HEUN_KEYS)?;
    let q = l.get("q").unwrap_or_else(S::zero);
    let p = match (l.get("alpha"), l.get("beta")) {
        (Some(alpha), Some(beta)) => {
            let epsilon = fuchs_epsilon(&l, &alpha, &beta)?;
            HeunParams::new(l.need("gamma")?, l.need("delta")?, epsilon, alpha, beta, q.clone(), l.need("a")?)?
        }
        (None, None) => HeunParams::polynomial_case(
            class,
            n,
            l.need("gamma")?,
            l.need("delta")?,
            l.need("epsilon")?,
            l.need("a")?,
        )?,
        _ => bail!("give both alpha and beta, or neither"),
    };
    Ok(p.with_q(q))
}

/// Confluent parameters; `mu` and `nu` default to zero.
pub fn che_params<S: Scalar>(text: &str) -> anyhow::Result<(CheParams<S>, bool)> {
    let l = ParamList::<S>::parse(text, &CHE_KEYS)?;
    let p = CheParams::new(
        l.need("alpha")?,
        l.need("beta")?,
        l.need("gamma")?,
        l.get("mu").unwrap_or_else(S::zero),
        l.get("nu").unwrap_or_else(S::zero),
    );
    Ok((p, l.get("nu").is_some()))
}
