use serde::{Deserialize, Serialize};

use super::HopfData;
use crate::error::{QgwError, Result};
use crate::gtensor::{Mode, TensorElement};
use crate::ncalg::{element_from_file, element_to_file, Presentation, PresentationFile, TermFile};
use crate::scalars::Scalar;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TensorTermFile {
    pub coeff: String,
    pub legs: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct GeneratorMapsFile {
    pub generator: String,
    pub coproduct: Vec<TensorTermFile>,
    pub counit: String,
    #[serde(default)]
    pub antipode: Option<Vec<TermFile>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct HopfFile {
    pub name: String,
    pub presentation: PresentationFile,
    pub mode: Mode,
    pub group_like: Option<String>,
    pub maps: Vec<GeneratorMapsFile>,
}

impl HopfData {
    pub fn to_file(&self) -> HopfFile {
        let p = &self.pres;
        let name = |i: u8| p.gens()[i as usize].name.clone();
        let maps = (0..p.ngens() as u8)
            .map(|i| GeneratorMapsFile {
                generator: name(i),
                coproduct: self
                    .delta_gen(i)
                    .terms()
                    .map(|(legs, c)| TensorTermFile {
                        coeff: c.to_string(),
                        legs: legs.iter().map(|w| w.iter().map(|&x| name(x)).collect()).collect(),
                    })
                    .collect(),
                counit: self.eps_gen(i).to_string(),
                antipode: self.antipode_gen(i).ok().map(|s| element_to_file(p, s)),
            })
            .collect();
        HopfFile {
            name: self.name.clone(),
            presentation: p.to_file(),
            mode: self.mode,
            group_like: self.g.map(name),
            maps,
        }
    }

    pub fn from_file(f: &HopfFile) -> Result<HopfData> {
        let p = Presentation::from_file(&f.presentation)?.into_pres();
        let mut maps = Vec::new();
        for m in &f.maps {
            let mut d = TensorElement::zero(2, f.mode);
            for t in &m.coproduct {
                let legs = t
                    .legs
                    .iter()
                    .map(|l| l.iter().map(|n| p.idx(n)).collect::<Result<Vec<u8>>>())
                    .collect::<Result<Vec<_>>>()?;
                if legs.len() != 2 {
                    return Err(QgwError::Format("coproduct terms need two legs".into()));
                }
                d.add_term(legs, &Scalar::parse(&t.coeff)?);
            }
            let s = m.antipode.as_ref().map(|s| element_from_file(&p, s)).transpose()?;
            maps.push((m.generator.as_str(), d, Scalar::parse(&m.counit)?, s));
        }
        HopfData::from_named(&f.name, p.clone(), f.mode, &maps, f.group_like.as_deref())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<HopfData> {
        let f: HopfFile = serde_json::from_str(s).map_err(|e| QgwError::Format(e.to_string()))?;
        HopfData::from_file(&f)
    }
}
