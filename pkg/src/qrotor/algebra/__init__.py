"""q-numbers, su(2)/su_q(2) matrices and the rank-1 tensor operator."""

from qrotor.algebra.qnum import q_factorial, q_number, q_number_base_q2
from qrotor.algebra.generators import (
    casimir,
    casimir_q,
    casimir_q_forms,
    commutator_residuals,
    dump_matrix,
    su2_generators,
    suq2_generators,
)
from qrotor.algebra.ito import (
    ItoTriple,
    QcgTable,
    build_ito,
    build_qcg_table,
    ito_hamiltonian_matrix,
    ito_residuals,
    qcg_1x1_to_1,
    scalar_product,
    tensor_product_rank1,
    z_operator,
)
from qrotor.algebra.verify import VerificationReport, run_suite

__all__ = [
    "q_number",
    "q_factorial",
    "q_number_base_q2",
    "su2_generators",
    "suq2_generators",
    "casimir",
    "casimir_q",
    "casimir_q_forms",
    "commutator_residuals",
    "dump_matrix",
    "ItoTriple",
    "QcgTable",
    "build_ito",
    "build_qcg_table",
    "qcg_1x1_to_1",
    "z_operator",
    "tensor_product_rank1",
    "scalar_product",
    "ito_hamiltonian_matrix",
    "ito_residuals",
    "VerificationReport",
    "run_suite",
]
