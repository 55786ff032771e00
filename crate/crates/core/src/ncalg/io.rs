use serde::{Deserialize, Serialize};

use super::element::Element;
use super::presentation::{Presentation, Skeleton, DEFAULT_STEP_CAP};
use crate::error::{QgwError, Result};
use crate::scalars::Scalar;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermFile {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct GeneratorFile {
    pub name: String,
    pub degree: u8,
    #[serde(default)]
    pub nilpotent: bool,
    #[serde(default)]
    pub inverse: Option<String>,
    #[serde(default = "one")]
    pub weight: i32,
}

fn one() -> i32 {
    1
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RuleFile {
    pub lhs: [String; 2],
    pub rhs: Vec<TermFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PresentationFile {
    pub name: String,
    pub generators: Vec<GeneratorFile>,
    pub rules: Vec<RuleFile>,
}

pub fn element_to_file(p: &Presentation, e: &Element) -> Vec<TermFile> {
    e.terms()
        .map(|(w, c)| TermFile {
            coeff: c.to_string(),
            word: w.iter().map(|&g| p.gens()[g as usize].name.clone()).collect(),
        })
        .collect()
}

fn lookup(names: &[String], n: &str) -> Result<u8> {
    names
        .iter()
        .position(|x| x == n)
        .map(|i| i as u8)
        .ok_or_else(|| QgwError::UnknownName(n.to_string()))
}

fn element_from_names(names: &[String], terms: &[TermFile]) -> Result<Element> {
    let mut e = Element::zero();
    for t in terms {
        let w = t.word.iter().map(|n| lookup(names, n)).collect::<Result<Vec<u8>>>()?;
        e.add_term(w, &Scalar::parse(&t.coeff)?);
    }
    Ok(e)
}

pub fn element_from_file(p: &Presentation, terms: &[TermFile]) -> Result<Element> {
    let names: Vec<String> = p.gens().iter().map(|g| g.name.clone()).collect();
    element_from_names(&names, terms)
}

impl Presentation {
    pub fn to_file(&self) -> PresentationFile {
        let sk = self.to_skeleton();
        PresentationFile {
            name: self.name.clone(),
            generators: self
                .gens()
                .iter()
                .map(|g| GeneratorFile {
                    name: g.name.clone(),
                    degree: g.degree,
                    nilpotent: g.nilpotent,
                    inverse: g.inverse.map(|i| self.gens()[i as usize].name.clone()),
                    weight: g.weight,
                })
                .collect(),
            rules: sk
                .rules
                .iter()
                .map(|((a, b), rhs)| RuleFile {
                    lhs: [self.gens()[*a as usize].name.clone(), self.gens()[*b as usize].name.clone()],
                    rhs: element_to_file(self, rhs),
                })
                .collect(),
        }
    }

    pub fn from_file(f: &PresentationFile) -> Result<Presentation> {
        let names: Vec<String> = f.generators.iter().map(|g| g.name.clone()).collect();
        let mut sk = Skeleton::new(&f.name);
        for g in &f.generators {
            let i = sk.gen(&g.name, g.degree);
            sk.weight(i, g.weight);
            if g.nilpotent {
                sk.nilpotent(i);
            }
        }
        for (i, g) in f.generators.iter().enumerate() {
            if let Some(inv) = &g.inverse {
                let j = lookup(&names, inv)?;
                sk.gens[i].inverse = Some(j);
                if sk.gens[j as usize].inverse.is_some_and(|k| k as usize != i) {
                    return Err(QgwError::Format(format!("inverse of {inv} is not mutual")));
                }
            }
        }
        for r in &f.rules {
            let a = lookup(&names, &r.lhs[0])?;
            let b = lookup(&names, &r.lhs[1])?;
            sk.rule(a, b, element_from_names(&names, &r.rhs)?);
        }
        Presentation::from_skeleton(sk, DEFAULT_STEP_CAP)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Presentation> {
        let f: PresentationFile = serde_json::from_str(s).map_err(|e| QgwError::Format(e.to_string()))?;
        Presentation::from_file(&f)
    }
}
