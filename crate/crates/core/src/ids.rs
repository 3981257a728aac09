use std::borrow::Borrow;
use std::fmt;

macro_rules! label_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(String);

        impl $name {
            pub fn new(label: impl Into<String>) -> Self {
                $name(label.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(label: &str) -> Self {
                $name(label.to_string())
            }
        }

        impl From<String> for $name {
            fn from(label: String) -> Self {
                $name(label)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }

        impl AsRef<str> for $name {
            fn as_ref(&self) -> &str {
                &self.0
            }
        }
    };
}

label_type!(
    /// Label of a node in the hypergraph layer.
    HyperNodeId
);
label_type!(
    /// Identifier of a directed hyperedge.
    HyperEdgeId
);
label_type!(
    /// Label of a node in the graph layer.
    GraphNodeId
);
