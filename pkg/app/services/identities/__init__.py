from .base import (
    IDENTITY_REGISTRY,
    BaseIdentity,
    IdentityCase,
    IdentityEvaluationError,
    UnknownIdentity,
    apply_order_overrides,
    clear_order_overrides,
    default_order_for,
    get_identity,
    list_identities,
)
from .theta_identities import (
    H1TheoremIdentity,
    JEllipticIdentity,
    JInversionIdentity,
    JModDecIdentity,
    JModIncIdentity,
    ProductRearrangementIdentity,
    TripleProductIdentity,
)
from .appell_equations import (
    AppellFlipIdentity,
    AppellRewrittenIdentity,
    AppellXStepIdentity,
    AppellZChangeIdentity,
    AppellZPeriodIdentity,
)
from .double_sums import (
    F111ZeroIdentity,
    F331ReduceIdentity,
    F441ReduceIdentity,
    FFlipIdentity,
    FShiftIdentity,
    LemmaA0Identity,
    LemmaA1Identity,
    LemmaA2Identity,
    LemmaA3Identity,
    LemmaB0Identity,
    LemmaB1Identity,
    LemmaB2Identity,
    SymmetryShift151Identity,
    SymmetryShift171Identity,
)
from .triple_sums import GFlipIdentity, GShiftIdentity, GenericShiftIdentity
from .closed_form_identities import (
    CorollaryVsTheoremIdentity,
    F121ExpansionIdentity,
    F131ExpansionIdentity,
    F331ExpansionIdentity,
    F441ExpansionIdentity,
    HPartsCancelIdentity,
    ThmMainVsDirectIdentity,
)
from .mock_theta import (
    Chi0AppellIdentity,
    Chi1AppellIdentity,
    NewId1Identity,
    NewId2Identity,
    NewId3Identity,
    NewId4Identity,
    NewId5Identity,
    ZwegersChi0Identity,
    ZwegersChi1Identity,
)
from .false_theta import (
    KimLovejoyEulerianAIdentity,
    KimLovejoyEulerianBIdentity,
    KimLovejoyGenericAIdentity,
    KimLovejoyGenericBIdentity,
    KimLovejoyTriple1Identity,
    KimLovejoyTriple2Identity,
)

__all__ = [
    'IDENTITY_REGISTRY',
    'BaseIdentity',
    'IdentityCase',
    'IdentityEvaluationError',
    'UnknownIdentity',
    'apply_order_overrides',
    'clear_order_overrides',
    'default_order_for',
    'get_identity',
    'list_identities',
    'H1TheoremIdentity',
    'JEllipticIdentity',
    'JInversionIdentity',
    'JModDecIdentity',
    'JModIncIdentity',
    'ProductRearrangementIdentity',
    'TripleProductIdentity',
    'AppellFlipIdentity',
    'AppellRewrittenIdentity',
    'AppellXStepIdentity',
    'AppellZChangeIdentity',
    'AppellZPeriodIdentity',
    'F111ZeroIdentity',
    'F331ReduceIdentity',
    'F441ReduceIdentity',
    'FFlipIdentity',
    'FShiftIdentity',
    'LemmaA0Identity',
    'LemmaA1Identity',
    'LemmaA2Identity',
    'LemmaA3Identity',
    'LemmaB0Identity',
    'LemmaB1Identity',
    'LemmaB2Identity',
    'SymmetryShift151Identity',
    'SymmetryShift171Identity',
    'GFlipIdentity',
    'GShiftIdentity',
    'GenericShiftIdentity',
    'CorollaryVsTheoremIdentity',
    'F121ExpansionIdentity',
    'F131ExpansionIdentity',
    'F331ExpansionIdentity',
    'F441ExpansionIdentity',
    'HPartsCancelIdentity',
    'ThmMainVsDirectIdentity',
    'Chi0AppellIdentity',
    'Chi1AppellIdentity',
    'NewId1Identity',
    'NewId2Identity',
    'NewId3Identity',
    'NewId4Identity',
    'NewId5Identity',
    'ZwegersChi0Identity',
    'ZwegersChi1Identity',
    'KimLovejoyEulerianAIdentity',
    'KimLovejoyEulerianBIdentity',
    'KimLovejoyGenericAIdentity',
    'KimLovejoyGenericBIdentity',
    'KimLovejoyTriple1Identity',
    'KimLovejoyTriple2Identity',
]
