"""Koszulness, quadraticity and sequential Cohen-Macaulayness for reduced
incidence algebras of finite posets, with monomial right ideals and the
squarefree (Stanley-Reisner) bridge."""

from .builders import (antichain, boolean_lattice, chain, divisor_poset,
                       face_poset, fixture_names, moebius_band,
                       named_fixture, semigroup_interval)
from .complexes import ComplexError, SimplicialComplex
from .engine import (KoszulReport, MonomialRightIdeal, PreconditionError,
                     QuadraticReport, TorTable, augmentation_ideal,
                     gr_product, ideal_from_generators, interval_complex,
                     is_koszul_ideal, is_koszul_ring, is_quadratic, is_sgc,
                     module_action, module_degrees, product,
                     restricted_complex, tor_bar_oracle, tor_topological)
from .homology import (is_acyclic, is_cm, is_seq_acyclic,
                       is_seq_acyclic_relative, is_seq_cm, pair_chain_dims,
                       reduced_homology, relative_homology)
from .linalg import Field
from .numerology import (PolyMatrix, h_diagonal_check, hilbert_matrix,
                         poincare_matrix, poly_add, poly_mul, poly_str,
                         poly_sub, poly_trim, verify_koszul_identity)
from .posetfile import (ParseError, build_input, facet_text, fixture_text,
                        parse_facets, parse_posetfile, print_posetfile)
from .posets import Poset, PosetError
from .relations import (AxiomReport, IntervalClass, IntervalEquivalence,
                        InternalCheckError, RelationError, from_class_list,
                        restricted_subposet, semigroup_relation,
                        trivial_relation, validate_axioms)
from .sr import (EhhrwReport, LinearityReport, SquarefreeIdeal,
                 bridge_ideal, case1_complexes, case2_nonsquarefree_layers,
                 ehhrw_crosscheck, ideal_of_complex, is_componentwise_linear,
                 monomial_name, squarefree_ambient)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
