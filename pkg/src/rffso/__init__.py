"""Closed-form and Monte Carlo performance of a dual-hop AF RF-FSO relay link
with partial relay selection, outdated CSI, Gamma-Gamma turbulence and
pointing errors."""
from .analytics import (BPSK, DBPSK, ModulationScheme, PerfPoint, avg_ber, cdf_eq, ccdf_eq,
                        ergodic_capacity)
from .channel import (ChannelConfig, DerivedFsoParams, FsoConfig, LinkBudget, RfConfig, derive_fso,
                      gamma_eq, re_constant, rf_cdf, rf_pdf, fso_snr_pdf)
from .mc import McEstimate, SimPlan, estimate
from .specfun import (ContourConfig, Egbmgf2Spec, MeijerGSpec, egbmgf, erf, log_gamma_complex, meijer_g)

__version__ = "0.1.0"
