"""Exact computer algebra for the superalgebra of three-particle Calogero
observables at zero coupling: normal-ordered products, the two-parameter
supertrace, invariant bilinear forms, constructive simplicity certificates
and an independent Dunkl-operator representation."""

__version__ = "0.1.0"

from .cyclotomic import CycNum, CycMatrix, OMEGA, ONE, ZERO
from .algebra import (Element, Monomial, normal_mul, reorder_oracle,
                      superbracket, commutator, tau, gradings,
                      as_m_polynomial, m_power, unit, scalar,
                      x_elt, xp_elt, y_elt, yp_elt, q_elt, l_elt, k_elt,
                      m_elt, t_elt)
from .mpoly import MPolynomial
from .sl2 import (singlet_project, highest_vector_ascend, isotypic_decompose,
                  IsotypicReport)
from .supertrace import (StrValue, str_eval, str_m_power, series_QL,
                         str_constraint_oracle, gram)
from .structure import (simplicity_certificate, replay_certificate,
                        SimplicityCertificate, CertificateError,
                        center_basis, commutant_slice, BracketSpan,
                        lie_ideal_experiment, form_independence_on_commutant,
                        phi_parity_check, shift_polynomial)
from .parser import parse, parse_element, ParseError
