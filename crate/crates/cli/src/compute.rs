use std::io::{self, Write};

use clap::ValueEnum;
use qcong_core::divisors::{big_d, big_p, ev, q_bar, q_hat, q_tilde};
use qcong_core::qbinom::{gauss, gauss_factored};
use qcong_core::sequences::{sequence, SequenceId};
use qcong_core::{cyclotomic, FactoredPoly, IntPoly};

use crate::records::{coeff_strings, factor_list, OutputRecord};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Euler,
    Tangent,
    Salie,
    GenEuler,
    SalieBar,
    SalieHat,
    SalieTilde,
    #[value(name = "P")]
    P,
    #[value(name = "D")]
    D,
    #[value(name = "Ev")]
    Ev,
    #[value(name = "Qbar")]
    Qbar,
    #[value(name = "Qhat")]
    Qhat,
    #[value(name = "Qtilde")]
    Qtilde,
    Cyclotomic,
    Gauss,
}

impl Family {
    fn name(&self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    fn sequence_id(&self, k: Option<usize>) -> Result<Option<SequenceId>, CliError> {
        Ok(Some(match self {
            Family::Euler => SequenceId::Euler,
            Family::Tangent => SequenceId::Tangent,
            Family::Salie => SequenceId::Salie,
            Family::SalieBar => SequenceId::SalieBar,
            Family::SalieHat => SequenceId::SalieHat,
            Family::SalieTilde => SequenceId::SalieTilde,
            Family::GenEuler => match k {
                Some(k) if k >= 1 => SequenceId::GenEuler(k),
                _ => return Err(CliError::Usage("gen-euler needs --k >= 1".into())),
            },
            _ => return Ok(None),
        }))
    }

    fn divisor_family(&self) -> Option<fn(usize) -> FactoredPoly> {
        match self {
            Family::P => Some(big_p),
            Family::D => Some(big_d),
            Family::Ev => Some(ev),
            Family::Qbar => Some(q_bar),
            Family::Qhat => Some(q_hat),
            Family::Qtilde => Some(q_tilde),
            _ => None,
        }
    }
}

pub struct Computed {
    pub record: OutputRecord,
    pub label: String,
    pub value: IntPoly,
    pub factored: Option<FactoredPoly>,
}

fn computed(
    family: &str,
    index: usize,
    k: Option<usize>,
    label: String,
    value: IntPoly,
    factored: Option<FactoredPoly>,
) -> Computed {
    Computed {
        record: OutputRecord {
            family: family.to_string(),
            index,
            k,
            coeffs: coeff_strings(&value),
            factored: factored.as_ref().map(factor_list),
        },
        label,
        value,
        factored,
    }
}

fn sequence_label(id: SequenceId, n: usize) -> String {
    let sub = id.series_index(n);
    match id {
        SequenceId::Euler => format!("E_{sub}"),
        SequenceId::Tangent => format!("T_{sub}"),
        SequenceId::Salie => format!("S_{sub}"),
        SequenceId::GenEuler(k) => format!("E^({k})_{sub}"),
        SequenceId::SalieBar => format!("Sbar_{sub}"),
        SequenceId::SalieHat => format!("Shat_{sub}"),
        SequenceId::SalieTilde => format!("Stilde_{sub}"),
    }
}

pub fn records(family: Family, n: usize, k: Option<usize>) -> Result<Vec<Computed>, CliError> {
    let name = family.name();
    if let Some(id) = family.sequence_id(k)? {
        let k_field = if let SequenceId::GenEuler(k) = id {
            Some(k)
        } else {
            None
        };
        return Ok((0..=n)
            .map(|i| {
                computed(
                    &name,
                    i,
                    k_field,
                    sequence_label(id, i),
                    sequence(id, i),
                    None,
                )
            })
            .collect());
    }
    if let Some(f) = family.divisor_family() {
        return Ok((1..=n)
            .map(|i| {
                let factored = f(i);
                computed(
                    &name,
                    i,
                    None,
                    format!("{name}_{i}"),
                    factored.expand(),
                    Some(factored),
                )
            })
            .collect());
    }
    match family {
        Family::Cyclotomic => Ok((1..=n)
            .map(|i| {
                computed(
                    &name,
                    i,
                    None,
                    format!("Phi_{i}"),
                    cyclotomic(i),
                    Some(FactoredPoly::phi(i)),
                )
            })
            .collect()),
        Family::Gauss => {
            let lower: Vec<usize> = match k {
                Some(k) if k > n => {
                    return Err(CliError::Usage(format!(
                        "gauss needs --k <= --n, got k={k} n={n}"
                    )))
                }
                Some(k) => vec![k],
                None => (0..=n).collect(),
            };
            Ok(lower
                .into_iter()
                .map(|j| {
                    computed(
                        &name,
                        n,
                        Some(j),
                        format!("[{n},{j}]"),
                        gauss(n, j as i64),
                        Some(gauss_factored(n, j)),
                    )
                })
                .collect())
        }
        _ => unreachable!("every family is handled above"),
    }
}

pub fn write(w: &mut dyn Write, items: &[Computed], json: bool) -> io::Result<()> {
    for item in items {
        if json {
            serde_json::to_writer(&mut *w, &item.record)?;
            writeln!(w)?;
        } else {
            match &item.factored {
                Some(f) => writeln!(w, "{} = {} = {}", item.label, f, item.value)?,
                None => writeln!(w, "{} = {}", item.label, item.value)?,
            }
        }
    }
    Ok(())
}
