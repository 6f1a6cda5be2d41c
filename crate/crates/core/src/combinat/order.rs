use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

type IntCmp = Arc<dyn Fn(u32, u32) -> Ordering + Send + Sync>;
type SetCmp = Arc<dyn Fn(&[u32], &[u32], u32) -> Ordering + Send + Sync>;

/// A strict total order on positive integers.
///
/// `compare(a, b) == Greater` means `a ≻ b`.
#[derive(Clone, Default)]
pub enum IntOrder {
    /// The usual order; the default powersum family.
    #[default]
    Natural,
    /// Even numbers above odd numbers, natural order within a parity class.
    EvenOdd,
    Reverse(Box<IntOrder>),
    Custom {
        name: String,
        cmp: IntCmp,
    },
}

impl IntOrder {
    pub fn custom(
        name: impl Into<String>,
        cmp: impl Fn(u32, u32) -> Ordering + Send + Sync + 'static,
    ) -> Self {
        Self::Custom {
            name: name.into(),
            cmp: Arc::new(cmp),
        }
    }

    pub fn compare(&self, a: u32, b: u32) -> Ordering {
        match self {
            Self::Natural => a.cmp(&b),
            Self::EvenOdd => a
                .is_multiple_of(2)
                .cmp(&b.is_multiple_of(2))
                .then(a.cmp(&b)),
            Self::Reverse(inner) => inner.compare(b, a),
            Self::Custom { cmp, .. } => cmp(a, b),
        }
    }

    /// `a ≺ b`.
    pub fn less(&self, a: u32, b: u32) -> bool {
        self.compare(a, b) == Ordering::Less
    }

    pub fn reversed(&self) -> Self {
        match self {
            Self::Reverse(inner) => (**inner).clone(),
            other => Self::Reverse(Box::new(other.clone())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Natural => "desc".into(),
            Self::EvenOdd => "evenodd".into(),
            Self::Reverse(inner) => format!("reverse:{}", inner.name()),
            Self::Custom { name, .. } => name.clone(),
        }
    }

    /// Built-in orders by name; `reverse:` prefixes nest.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "desc" | "natural" => Some(Self::Natural),
            "evenodd" => Some(Self::EvenOdd),
            _ => name
                .strip_prefix("reverse:")
                .and_then(Self::by_name)
                .map(|o| o.reversed()),
        }
    }

    pub fn builtins() -> Vec<Self> {
        vec![
            Self::Natural,
            Self::EvenOdd,
            Self::Natural.reversed(),
            Self::EvenOdd.reversed(),
        ]
    }
}

impl fmt::Debug for IntOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntOrder({})", self.name())
    }
}

impl PartialEq for IntOrder {
    fn eq(&self, other: &Self) -> bool {
        self.name() == other.name()
    }
}

impl Eq for IntOrder {}

impl std::hash::Hash for IntOrder {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name().hash(state);
    }
}

/// A strict total order on disjoint finite sets of positive integers.
///
/// `compare(a, b, n) == Greater` means `a ▷ b`. Blocks are sorted slices and
/// `n` is the size of the ambient ground set, which only the complement
/// combinator looks at.
#[derive(Clone, Default)]
pub enum SetOrder {
    /// Larger set wins; for equal sizes the smaller minimum wins.
    #[default]
    Dtilde,
    /// Larger set wins; for equal sizes the larger upper median wins.
    Med,
    /// Larger minimum wins, regardless of size.
    Min,
    Reverse(Box<SetOrder>),
    /// `A ▷̄ B` iff `Ā ▷ B̄`, with `i ↦ n + 1 - i`.
    Complement(Box<SetOrder>),
    Custom {
        name: String,
        cmp: SetCmp,
        shift_invariant: bool,
        standard_invariant: bool,
        projection: Option<IntOrder>,
    },
}

impl SetOrder {
    pub fn compare(&self, a: &[u32], b: &[u32], n: u32) -> Ordering {
        match self {
            Self::Dtilde => a.len().cmp(&b.len()).then_with(|| b[0].cmp(&a[0])),
            Self::Med => a
                .len()
                .cmp(&b.len())
                .then_with(|| a[a.len() / 2].cmp(&b[b.len() / 2])),
            Self::Min => a[0].cmp(&b[0]),
            Self::Reverse(inner) => inner.compare(b, a, n),
            Self::Complement(inner) => {
                let bar = |s: &[u32]| -> Vec<u32> { s.iter().rev().map(|&x| n + 1 - x).collect() };
                inner.compare(&bar(a), &bar(b), n)
            }
            Self::Custom { cmp, .. } => cmp(a, b, n),
        }
    }

    /// `a ▷ b`.
    pub fn greater(&self, a: &[u32], b: &[u32], n: u32) -> bool {
        self.compare(a, b, n) == Ordering::Greater
    }

    pub fn reversed(&self) -> Self {
        match self {
            Self::Reverse(inner) => (**inner).clone(),
            other => Self::Reverse(Box::new(other.clone())),
        }
    }

    pub fn complemented(&self) -> Self {
        match self {
            Self::Complement(inner) => (**inner).clone(),
            other => Self::Complement(Box::new(other.clone())),
        }
    }

    pub fn shift_invariant(&self) -> bool {
        match self {
            Self::Dtilde | Self::Med | Self::Min => true,
            Self::Reverse(inner) | Self::Complement(inner) => inner.shift_invariant(),
            Self::Custom {
                shift_invariant, ..
            } => *shift_invariant,
        }
    }

    pub fn standard_invariant(&self) -> bool {
        match self {
            Self::Dtilde | Self::Med | Self::Min => true,
            Self::Reverse(inner) | Self::Complement(inner) => inner.standard_invariant(),
            Self::Custom {
                standard_invariant, ..
            } => *standard_invariant,
        }
    }

    /// The integer order that sizes of different-size blocks are compared by,
    /// when there is one.
    pub fn projection(&self) -> Option<IntOrder> {
        match self {
            Self::Dtilde | Self::Med => Some(IntOrder::Natural),
            Self::Min => None,
            Self::Reverse(inner) => inner.projection().map(|o| o.reversed()),
            Self::Complement(inner) => inner.projection(),
            Self::Custom { projection, .. } => projection.clone(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Dtilde => "dtilde".into(),
            Self::Med => "med".into(),
            Self::Min => "min".into(),
            Self::Reverse(inner) => format!("reverse:{}", inner.name()),
            Self::Complement(inner) => format!("bar:{}", inner.name()),
            Self::Custom { name, .. } => name.clone(),
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "dtilde" => Some(Self::Dtilde),
            "med" => Some(Self::Med),
            "min" => Some(Self::Min),
            _ => {
                if let Some(rest) = name.strip_prefix("reverse:") {
                    Self::by_name(rest).map(|o| o.reversed())
                } else {
                    name.strip_prefix("bar:")
                        .and_then(Self::by_name)
                        .map(|o| o.complemented())
                }
            }
        }
    }

    pub fn builtins() -> Vec<Self> {
        vec![
            Self::Dtilde,
            Self::Med,
            Self::Min,
            Self::Dtilde.reversed(),
            Self::Dtilde.complemented(),
            Self::Med.complemented(),
        ]
    }
}

impl fmt::Debug for SetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetOrder({})", self.name())
    }
}

impl PartialEq for SetOrder {
    fn eq(&self, other: &Self) -> bool {
        self.name() == other.name()
    }
}

impl Eq for SetOrder {}

impl std::hash::Hash for SetOrder {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name().hash(state);
    }
}
