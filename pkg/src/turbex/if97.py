"""Water/steam thermodynamic properties per IAPWS-IF97 (regions 1, 2 and 4).

Implements the basic Gibbs-energy equations for compressed liquid (region 1)
and superheated vapor (region 2), the region-4 saturation line, and the
backward equations T(p,h) used to seed Newton refinement when resolving a
state from pressure and enthalpy.  Wet mixtures are handled by lever-rule
interpolation between the saturated-liquid and saturated-vapor states.

Regions 3 (near-critical) and 5 (very high temperature) are intentionally
not implemented; inputs that fall there raise :class:`PropertyDomainError`.

Units are IF97-native throughout: p [MPa], T [K], h [kJ/kg], s [kJ/(kg K)],
v [m3/kg].  Unit conversions belong at the I/O boundary, not here.

Reference
---------
IAPWS, Revised Release on the IAPWS Industrial Formulation 1997 for the
Thermodynamic Properties of Water and Steam (August 2007),
http://www.iapws.org/relguide/IF97-Rev.html
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

# Fundamental constants (IF97 section 3)
R = 0.461526            # specific gas constant of water [kJ/(kg K)]
T_CRIT = 647.096        # critical temperature [K]
P_CRIT = 22.064         # critical pressure [MPa]
T_MIN = 273.15          # lower validity bound [K]
T_MAX = 863.15          # upper bound supported here (B23 ceiling) [K]
P_MAX = 100.0           # upper pressure bound [MPa]
P_SAT_MIN = 611.213e-6  # saturation pressure at 273.15 K [MPa]
T_REGION1_MAX = 623.15  # region 1/3 boundary temperature [K]

# Saturation pressure at 623.15 K; wet mixtures above this pressure would
# require region 3 and are rejected.
P_SAT_623 = 16.529164252605    # MPa, = saturation_pressure(623.15)

# Convergence target for T(p,h) Newton refinement [kJ/kg]
H_NEWTON_TOL = 1e-3
_NEWTON_MAX_ITER = 50

# Relative half-width of the two-phase band around [h_f, h_g]; absorbs
# table-rounded inputs that land microscopically outside the dome.
TWO_PHASE_REL_TOL = 1e-6


class PropertyDomainError(ValueError):
    """Input outside the validity range of the implemented formulation."""


class SaturationAmbiguousError(PropertyDomainError):
    """(p, T) lies on the saturation line, where the state is undetermined."""


class UnresolvableStateError(PropertyDomainError):
    """No temperature in the region's validity range matches (p, h)."""

    def __init__(self, p: float, h: float, detail: str):
        self.p = p
        self.h = h
        super().__init__(f"no state for p = {p:g} MPa, h = {h:g} kJ/kg: {detail}")


class Region(Enum):
    """Phase classification of a resolved water/steam state."""

    COMPRESSED_LIQUID = "compressed-liquid"
    SUPERHEATED_VAPOR = "superheated-vapor"
    TWO_PHASE = "two-phase"


@dataclass(frozen=True)
class ThermoState:
    """A fully resolved water/steam state.

    ``x`` is the vapor mass fraction, present only for two-phase states.
    For two-phase states ``T`` equals the saturation temperature at ``p``.
    """

    region: Region
    p: float                 # MPa
    T: float                 # K
    h: float                 # kJ/kg
    s: float                 # kJ/(kg K)
    x: Optional[float] = None

    @property
    def t_celsius(self) -> float:
        return self.T - 273.15


@dataclass(frozen=True)
class SaturationPoint:
    """Saturated liquid/vapor properties bracketing the dome at pressure p."""

    p: float      # MPa
    T: float      # K, saturation temperature
    h_f: float    # kJ/kg, saturated liquid
    h_g: float    # kJ/kg, saturated vapor
    s_f: float    # kJ/(kg K)
    s_g: float    # kJ/(kg K)


class BaseProps(NamedTuple):
    """Single-phase properties from a region's Gibbs-energy equation."""

    v: float    # m3/kg
    h: float    # kJ/kg
    u: float    # kJ/kg
    s: float    # kJ/(kg K)
    cp: float   # kJ/(kg K)
    w: float    # m/s


# ---------------------------------------------------------------------------
# Coefficient tables, transcribed from the 2007 IF97 release.
# Region 1: Table 2.  Region 2: Tables 10-11.  Saturation: Table 34.
# Backward T(p,h): Tables 6, 20, 21, 22.  Boundaries: Eqs 5-6 and 20-21.
# ---------------------------------------------------------------------------

_R1_I = np.array([
    0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3,
    3, 3, 4, 4, 4, 5, 8, 8, 21, 23, 29, 30, 31, 32], dtype=float)
_R1_J = np.array([
    -2, -1, 0, 1, 2, 3, 4, 5, -9, -7, -1, 0, 1, 3, -3, 0, 1, 3, 17, -4,
    0, 6, -5, -2, 10, -8, -11, -6, -29, -31, -38, -39, -40, -41], dtype=float)
_R1_N = np.array([
    0.14632971213167e0, -0.84548187169114e0, -0.37563603672040e1,
    0.33855169168385e1, -0.95791963387872e0, 0.15772038513228e0,
    -0.16616417199501e-1, 0.81214629983568e-3, 0.28319080123804e-3,
    -0.60706301565874e-3, -0.18990068218419e-1, -0.32529748770505e-1,
    -0.21841717175414e-1, -0.52838357969930e-4, -0.47184321073267e-3,
    -0.30001780793026e-3, 0.47661393906987e-4, -0.44141845330846e-5,
    -0.72694996297594e-15, -0.31679644845054e-4, -0.28270797985312e-5,
    -0.85205128120103e-9, -0.22425281908000e-5, -0.65171222895601e-6,
    -0.14341729937924e-12, -0.40516996860117e-6, -0.12734301741682e-8,
    -0.17424871230634e-9, -0.68762131295531e-18, 0.14478307828521e-19,
    0.26335781662795e-22, -0.11947622640071e-22, 0.18228094581404e-23,
    -0.93537087292458e-25])

_R2_J0 = np.array([0, 1, -5, -4, -3, -2, -1, 2, 3], dtype=float)
_R2_N0 = np.array([
    -0.96927686500217e1, 0.10086655968018e2, -0.56087911283020e-2,
    0.71452738081455e-1, -0.40710498223928e0, 0.14240819171444e1,
    -0.43839511319450e1, -0.28408632460772e0, 0.21268463753307e-1])

_R2_I = np.array([
    1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 5, 6,
    6, 6, 7, 7, 7, 8, 8, 9, 10, 10, 10, 16, 16, 18, 20, 20, 20, 21,
    22, 23, 24, 24, 24], dtype=float)
_R2_J = np.array([
    0, 1, 2, 3, 6, 1, 2, 4, 7, 36, 0, 1, 3, 6, 35, 1, 2, 3, 7, 3,
    16, 35, 0, 11, 25, 8, 36, 13, 4, 10, 14, 29, 50, 57, 20, 35, 48, 21,
    53, 39, 26, 40, 58], dtype=float)
_R2_N = np.array([
    -0.17731742473213e-2, -0.17834862292358e-1, -0.45996013696365e-1,
    -0.57581259083432e-1, -0.50325278727930e-1, -0.33032641670203e-4,
    -0.18948987516315e-3, -0.39392777243355e-2, -0.43797295650573e-1,
    -0.26674547914087e-4, 0.20481737692309e-7, 0.43870667284435e-6,
    -0.32277677238570e-4, -0.15033924542148e-2, -0.40668253562649e-4,
    -0.78847309559367e-9, 0.12790717852285e-7, 0.48225372718507e-6,
    0.22922076337661e-5, -0.16714766451061e-10, -0.21171472321355e-2,
    -0.23895741934104e-5, -0.59059564324270e-17, -0.12621808899101e-5,
    -0.38946842435739e-1, 0.11256211360459e-10, -0.82311340897998e0,
    0.19809712802088e-7, 0.10406965210174e-18, -0.10234747095929e-12,
    -0.10018179379511e-8, -0.80882908646985e-10, 0.10693031879409e0,
    -0.33662250574171e0, 0.89185845355421e-24, 0.30629316876232e-12,
    -0.42002467698208e-5, -0.59056029685639e-25, 0.37826947613457e-5,
    -0.12768608934681e-14, 0.73087610595061e-28, 0.55414715350778e-16,
    -0.94369707241210e-6])

_SAT_N = (
    0.11670521452767e4, -0.72421316703206e6, -0.17073846940092e2,
    0.12020824702470e5, -0.32325550322333e7, 0.14915108613530e2,
    -0.48232657361591e4, 0.40511340542057e6, -0.23855557567849e0,
    0.65017534844798e3)

# Region 2/3 boundary (Eqs 5-6)
_B23_N = (
    0.34805185628969e3, -0.11671859879975e1, 0.10192970039326e-2,
    0.57254459862746e3, 0.13918839778870e2)

# Region 2b/2c dividing line in (p, h) (Eqs 20-21)
_B2BC_N = (
    0.90584278514723e3, -0.67955786399241e0, 0.12809002730136e-3,
    0.26526571908428e4, 0.45257578905948e1)

_BW1_I = np.array([
    0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6],
    dtype=float)
_BW1_J = np.array([
    0, 1, 2, 6, 22, 32, 0, 1, 2, 3, 4, 10, 32, 10, 32, 10, 32, 32, 32, 32],
    dtype=float)
_BW1_N = np.array([
    -0.23872489924521e3, 0.40421188637945e3, 0.11349746881718e3,
    -0.58457616048039e1, -0.15285482413140e-3, -0.10866707695377e-5,
    -0.13391744872602e2, 0.43211039183559e2, -0.54010067170506e2,
    0.30535892203916e2, -0.65964749423638e1, 0.93965400878363e-2,
    0.11573647505340e-6, -0.25858641282073e-4, -0.40644363084799e-8,
    0.66456186191635e-7, 0.80670734103027e-10, -0.93477771213947e-12,
    0.58265442020601e-14, -0.15020185953503e-16])

_BW2A_I = np.array([
    0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2,
    2, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 7], dtype=float)
_BW2A_J = np.array([
    0, 1, 2, 3, 7, 20, 0, 1, 2, 3, 7, 9, 11, 18, 44, 0, 2, 7, 36, 38,
    40, 42, 44, 24, 44, 12, 32, 44, 32, 36, 42, 34, 44, 28], dtype=float)
_BW2A_N = np.array([
    0.10898952318288e4, 0.84951654495535e3, -0.10781748091826e3,
    0.33153654801263e2, -0.74232016790248e1, 0.11765048724356e2,
    0.18445749355790e1, -0.41792700549624e1, 0.62478196935812e1,
    -0.17344563108114e2, -0.20058176862096e3, 0.27196065473796e3,
    -0.45511318285818e3, 0.30919688604755e4, 0.25226640357872e6,
    -0.61707422868339e-2, -0.31078046629583e0, 0.11670873077107e2,
    0.12812798404046e9, -0.98554909623276e9, 0.28224546973002e10,
    -0.35948971410703e10, 0.17227349913197e10, -0.13551334240775e5,
    0.12848734664650e8, 0.13865724283226e1, 0.23598832556514e6,
    -0.13105236545054e8, 0.73999835474766e4, -0.55196697030060e6,
    0.37154085996233e7, 0.19127729239660e5, -0.41535164835634e6,
    -0.62459855192507e2])

_BW2B_I = np.array([
    0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2,
    3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 6, 7, 7, 9, 9], dtype=float)
_BW2B_J = np.array([
    0, 1, 2, 12, 18, 24, 28, 40, 0, 2, 6, 12, 18, 24, 28, 40, 2, 8, 18, 40,
    1, 2, 12, 24, 2, 12, 18, 24, 28, 40, 18, 24, 40, 28, 2, 28, 1, 40],
    dtype=float)
_BW2B_N = np.array([
    0.14895041079516e4, 0.74307798314034e3, -0.97708318797837e2,
    0.24742464705674e1, -0.63281320016026e0, 0.11385952129658e1,
    -0.47811863648625e0, 0.85208123431544e-2, 0.93747147377932e0,
    0.33593118604916e1, 0.33809355601454e1, 0.16844539671904e0,
    0.73875745236695e0, -0.47128737436186e0, 0.15020273139707e0,
    -0.21764114219750e-2, -0.21810755324761e-1, -0.10829784403677e0,
    -0.46333324635812e-1, 0.71280351959551e-4, 0.11032831789999e-3,
    0.18955248387902e-3, 0.30891541160537e-2, 0.13555504554949e-2,
    0.28640237477456e-6, -0.10779857357512e-4, -0.76462712454814e-4,
    0.14052392818316e-4, -0.31083814331434e-4, -0.10302738212103e-5,
    0.28217281635040e-6, 0.12704902271945e-5, 0.73803353468292e-7,
    -0.11030139238909e-7, -0.81456365207833e-13, -0.25180545682962e-10,
    -0.17565233969407e-17, 0.86934156344163e-14])

_BW2C_I = np.array([
    -7, -7, -6, -6, -5, -5, -2, -2, -1, -1, 0, 0, 1, 1, 2, 6, 6, 6,
    7, 7, 8, 9, 10], dtype=float)
_BW2C_J = np.array([
    0, 4, 0, 2, 0, 2, 0, 1, 0, 2, 0, 1, 4, 8, 4, 0, 1, 4,
    10, 12, 16, 20, 22], dtype=float)
_BW2C_N = np.array([
    -0.32368398555242e13, 0.73263350902181e13, 0.35825089945447e12,
    -0.58340131851590e12, -0.10783068217470e11, 0.20825544563171e11,
    0.61074783564516e6, 0.85977722535580e6, -0.25745723604170e5,
    0.31081088422714e5, 0.12082315865936e4, 0.48219755109255e3,
    0.37966001272486e1, -0.10842984880077e2, -0.45364172676660e-1,
    0.14559115658698e-12, 0.11261597407230e-11, -0.17804982240686e-10,
    0.12324579690832e-6, -0.11606921130984e-5, 0.27846367088554e-4,
    -0.59270038474176e-3, 0.12918582991878e-2])


# ---------------------------------------------------------------------------
# Basic (forward) equations
# ---------------------------------------------------------------------------

def _region1(p: float, T: float) -> BaseProps:
    """Region-1 Gibbs equation (IF97 Eq 7) at p [MPa], T [K]."""
    pi = p / 16.53
    tau = 1386.0 / T
    a = 7.1 - pi
    b = tau - 1.222

    g = float(np.sum(_R1_N * a**_R1_I * b**_R1_J))
    gp = float(-np.sum(_R1_N * _R1_I * a**(_R1_I - 1) * b**_R1_J))
    gpp = float(np.sum(_R1_N * _R1_I * (_R1_I - 1) * a**(_R1_I - 2) * b**_R1_J))
    gt = float(np.sum(_R1_N * _R1_J * a**_R1_I * b**(_R1_J - 1)))
    gtt = float(np.sum(_R1_N * _R1_J * (_R1_J - 1) * a**_R1_I * b**(_R1_J - 2)))
    gpt = float(-np.sum(_R1_N * _R1_I * _R1_J * a**(_R1_I - 1) * b**(_R1_J - 1)))

    v = R * T * pi * gp / (p * 1000.0)
    h = R * T * tau * gt
    u = h - p * v * 1000.0
    s = R * (tau * gt - g)
    cp = -R * tau**2 * gtt
    w = math.sqrt(1000.0 * R * T * gp**2
                  / ((gp - tau * gpt)**2 / (tau**2 * gtt) - gpp))
    return BaseProps(v, h, u, s, cp, w)


def _region2(p: float, T: float) -> BaseProps:
    """Region-2 Gibbs equation (IF97 Eqs 15-17) at p [MPa], T [K]."""
    pi = p / 1.0
    tau = 540.0 / T
    b = tau - 0.5

    g0 = math.log(pi) + float(np.sum(_R2_N0 * tau**_R2_J0))
    g0t = float(np.sum(_R2_N0 * _R2_J0 * tau**(_R2_J0 - 1)))
    g0tt = float(np.sum(_R2_N0 * _R2_J0 * (_R2_J0 - 1) * tau**(_R2_J0 - 2)))

    gr = float(np.sum(_R2_N * pi**_R2_I * b**_R2_J))
    grp = float(np.sum(_R2_N * _R2_I * pi**(_R2_I - 1) * b**_R2_J))
    grpp = float(np.sum(_R2_N * _R2_I * (_R2_I - 1) * pi**(_R2_I - 2) * b**_R2_J))
    grt = float(np.sum(_R2_N * _R2_J * pi**_R2_I * b**(_R2_J - 1)))
    grtt = float(np.sum(_R2_N * _R2_J * (_R2_J - 1) * pi**_R2_I * b**(_R2_J - 2)))
    grpt = float(np.sum(_R2_N * _R2_I * _R2_J * pi**(_R2_I - 1) * b**(_R2_J - 1)))

    v = R * T * pi * (1.0 / pi + grp) / (p * 1000.0)
    h = R * T * tau * (g0t + grt)
    u = h - p * v * 1000.0
    s = R * (tau * (g0t + grt) - (g0 + gr))
    cp = -R * tau**2 * (g0tt + grtt)
    w = math.sqrt(
        1000.0 * R * T * (1.0 + 2.0 * pi * grp + pi**2 * grp**2)
        / ((1.0 - pi**2 * grpp)
           + (1.0 + pi * grp - tau * pi * grpt)**2 / (tau**2 * (g0tt + grtt))))
    return BaseProps(v, h, u, s, cp, w)


# ---------------------------------------------------------------------------
# Saturation line (region 4) and region boundaries
# ---------------------------------------------------------------------------

def saturation_pressure(T: float) -> float:
    """Saturation pressure [MPa] at temperature T [K] (IF97 Eq 30).

    Valid for 273.15 K <= T <= 647.096 K; strictly increasing in T.
    """
    if not math.isfinite(T) or not T_MIN <= T <= T_CRIT:
        raise PropertyDomainError(
            f"saturation temperature {T!r} K outside [{T_MIN}, {T_CRIT}] K")
    n = _SAT_N
    theta = T + n[8] / (T - n[9])
    a = theta**2 + n[0] * theta + n[1]
    b = n[2] * theta**2 + n[3] * theta + n[4]
    c = n[5] * theta**2 + n[6] * theta + n[7]
    return (2.0 * c / (-b + math.sqrt(b**2 - 4.0 * a * c)))**4


def saturation_temperature(p: float) -> float:
    """Saturation temperature [K] at pressure p [MPa] (IF97 Eq 31).

    Valid for 611.213e-6 MPa <= p <= 22.064 MPa; inverse of
    :func:`saturation_pressure`.
    """
    if not math.isfinite(p) or not P_SAT_MIN <= p <= P_CRIT:
        raise PropertyDomainError(
            f"saturation pressure {p!r} MPa outside [{P_SAT_MIN:g}, {P_CRIT}] MPa")
    n = _SAT_N
    beta = p**0.25
    e = beta**2 + n[2] * beta + n[5]
    f = n[0] * beta**2 + n[3] * beta + n[6]
    g = n[1] * beta**2 + n[4] * beta + n[7]
    d = 2.0 * g / (-f - math.sqrt(f**2 - 4.0 * e * g))
    return (n[9] + d - math.sqrt((n[9] + d)**2 - 4.0 * (n[8] + n[9] * d))) / 2.0


def _b23_pressure(T: float) -> float:
    """Region 2/3 boundary pressure [MPa] at T [K] (IF97 Eq 5)."""
    n = _B23_N
    return n[0] + n[1] * T + n[2] * T**2


def _b2bc_enthalpy(p: float) -> float:
    """Enthalpy [kJ/kg] of the region 2b/2c dividing line at p [MPa] (Eq 21)."""
    n = _B2BC_N
    return n[3] + math.sqrt((p - n[4]) / n[2])


# ---------------------------------------------------------------------------
# Backward equations T(p,h)
# ---------------------------------------------------------------------------

def _backward1_t_ph(p: float, h: float) -> float:
    """Region-1 backward polynomial T(p,h) (IF97 Eq 11)."""
    eta = h / 2500.0
    return float(np.sum(_BW1_N * p**_BW1_I * (eta + 1.0)**_BW1_J))


def _backward2a_t_ph(p: float, h: float) -> float:
    """Region-2a backward polynomial T(p,h) (IF97 Eq 22)."""
    eta = h / 2000.0
    return float(np.sum(_BW2A_N * p**_BW2A_I * (eta - 2.1)**_BW2A_J))


def _backward2b_t_ph(p: float, h: float) -> float:
    """Region-2b backward polynomial T(p,h) (IF97 Eq 23)."""
    eta = h / 2000.0
    return float(np.sum(_BW2B_N * (p - 2.0)**_BW2B_I * (eta - 2.6)**_BW2B_J))


def _backward2c_t_ph(p: float, h: float) -> float:
    """Region-2c backward polynomial T(p,h) (IF97 Eq 24)."""
    eta = h / 2000.0
    return float(np.sum(_BW2C_N * (p + 25.0)**_BW2C_I * (eta - 1.8)**_BW2C_J))


def _backward2_t_ph(p: float, h: float) -> float:
    """Region-2 backward T(p,h), dispatching sub-regions 2a/2b/2c."""
    if p <= 4.0:
        return _backward2a_t_ph(p, h)
    if p < 6.546699678 or h >= _b2bc_enthalpy(p):
        return _backward2b_t_ph(p, h)
    return _backward2c_t_ph(p, h)


# ---------------------------------------------------------------------------
# Public state resolution
# ---------------------------------------------------------------------------

def props_pt(p: float, T: float) -> ThermoState:
    """Resolve a strictly single-phase state from pressure and temperature.

    Parameters
    ----------
    p : float
        Pressure [MPa], 0 < p <= 100.
    T : float
        Temperature [K], 273.15 <= T <= 863.15.

    Returns
    -------
    ThermoState
        With region resolved from the IF97 boundaries and h, s from the
        region's Gibbs-energy equation.

    Raises
    ------
    SaturationAmbiguousError
        If (p, T) falls on the saturation line; the state is undetermined
        there and must be resolved from (p, h) via :func:`state_from_ph`.
    PropertyDomainError
        Outside the validity envelope, or in unimplemented region 3.
    """
    if not (math.isfinite(p) and math.isfinite(T)):
        raise PropertyDomainError(f"non-finite input p = {p!r}, T = {T!r}")
    if not T_MIN <= T <= T_MAX:
        raise PropertyDomainError(
            f"temperature {T:g} K outside [{T_MIN}, {T_MAX}] K")
    if not 0.0 < p <= P_MAX:
        raise PropertyDomainError(f"pressure {p:g} MPa outside (0, {P_MAX}] MPa")

    if T <= T_REGION1_MAX:
        p_sat = saturation_pressure(T)
        if abs(p - p_sat) <= TWO_PHASE_REL_TOL * p_sat:
            raise SaturationAmbiguousError(
                f"(p = {p:g} MPa, T = {T:g} K) lies on the saturation line; "
                "the state is saturation-ambiguous -- resolve it from "
                "(p, h) with state_from_ph")
        if p > p_sat:
            props = _region1(p, T)
            region = Region.COMPRESSED_LIQUID
        else:
            props = _region2(p, T)
            region = Region.SUPERHEATED_VAPOR
    else:
        if p > _b23_pressure(T):
            raise PropertyDomainError(
                f"(p = {p:g} MPa, T = {T:g} K) falls in IF97 region 3, "
                "which is not implemented")
        props = _region2(p, T)
        region = Region.SUPERHEATED_VAPOR

    return ThermoState(region=region, p=p, T=T, h=props.h, s=props.s)


def saturation_line(p: float) -> SaturationPoint:
    """Saturated liquid and vapor properties at pressure p [MPa].

    Liquid-side values come from region 1 and vapor-side values from
    region 2, both evaluated at (p, T_sat(p)).  Limited to
    p <= 16.5292 MPa (saturation at 623.15 K); higher saturation states
    belong to region 3.
    """
    if not math.isfinite(p) or not P_SAT_MIN <= p <= P_CRIT:
        raise PropertyDomainError(
            f"saturation pressure {p!r} MPa outside [{P_SAT_MIN:g}, {P_CRIT}] MPa")
    if p > P_SAT_623:
        raise PropertyDomainError(
            f"saturated states at {p:g} MPa (> {P_SAT_623:.4f} MPa) lie in "
            "IF97 region 3, which is not implemented")
    t_sat = saturation_temperature(p)
    liq = _region1(p, t_sat)
    vap = _region2(p, t_sat)
    return SaturationPoint(p=p, T=t_sat,
                           h_f=liq.h, h_g=vap.h, s_f=liq.s, s_g=vap.s)


def _invert_t(region_fn, p: float, h: float, t_guess: float,
              t_lo: float, t_hi: float) -> float:
    """Solve region_fn(p, T).h == h by Newton iteration with bisection guard.

    h is strictly increasing in T at fixed p within a region (cp > 0), so a
    bracket [t_lo, t_hi] is maintained and any Newton step leaving it falls
    back to the midpoint.
    """
    h_lo = region_fn(p, t_lo).h
    h_hi = region_fn(p, t_hi).h
    if h < h_lo - H_NEWTON_TOL or h > h_hi + H_NEWTON_TOL:
        raise UnresolvableStateError(
            p, h, f"enthalpy outside [{h_lo:.3f}, {h_hi:.3f}] kJ/kg reachable "
                  f"for T in [{t_lo:.2f}, {t_hi:.2f}] K")
    T = min(max(t_guess, t_lo), t_hi)
    for _ in range(_NEWTON_MAX_ITER):
        props = region_fn(p, T)
        dh = props.h - h
        if abs(dh) <= H_NEWTON_TOL:
            return T
        if dh > 0.0:
            t_hi = min(t_hi, T)
        else:
            t_lo = max(t_lo, T)
        T -= dh / props.cp
        if not t_lo <= T <= t_hi:
            T = 0.5 * (t_lo + t_hi)
    raise UnresolvableStateError(
        p, h, f"Newton refinement did not reach |dh| <= {H_NEWTON_TOL} kJ/kg "
              f"in {_NEWTON_MAX_ITER} iterations")


def state_from_ph(p: float, h: float) -> ThermoState:
    """Resolve a state from pressure and enthalpy.

    Classification at p below the critical pressure: two-phase if h lies
    within [h_f, h_g] (with a 1e-6 relative band so that table-rounded
    inputs do not flip phase), else the single-phase temperature is solved
    in the matching region -- backward polynomial first, then Newton
    refinement on the forward equation until |dh| <= 1e-3 kJ/kg.

    Parameters
    ----------
    p : float
        Pressure [MPa].
    h : float
        Specific enthalpy [kJ/kg].

    Raises
    ------
    UnresolvableStateError
        If no temperature within the region's validity matches h.
    PropertyDomainError
        For non-finite input, pressure out of range, or states requiring
        region 3.
    """
    if not (math.isfinite(p) and math.isfinite(h)):
        raise PropertyDomainError(f"non-finite input p = {p!r}, h = {h!r}")
    if not 0.0 < p <= P_MAX:
        raise PropertyDomainError(f"pressure {p:g} MPa outside (0, {P_MAX}] MPa")

    if p <= P_SAT_623:
        if p < P_SAT_MIN:
            raise PropertyDomainError(
                f"pressure {p:g} MPa below the sublimation limit "
                f"{P_SAT_MIN:g} MPa")
        sat = saturation_line(p)
        if (sat.h_f - TWO_PHASE_REL_TOL * abs(sat.h_f) <= h
                <= sat.h_g + TWO_PHASE_REL_TOL * abs(sat.h_g)):
            x = (h - sat.h_f) / (sat.h_g - sat.h_f)
            x = min(max(x, 0.0), 1.0)
            s = sat.s_f + x * (sat.s_g - sat.s_f)
            return ThermoState(region=Region.TWO_PHASE, p=p, T=sat.T,
                               h=h, s=s, x=x)
        if h < sat.h_f:
            T = _invert_t(_region1, p, h, _backward1_t_ph(p, h), T_MIN, sat.T)
            return ThermoState(Region.COMPRESSED_LIQUID, p, T, h,
                               _region1(p, T).s)
        T = _invert_t(_region2, p, h, _backward2_t_ph(p, h), sat.T, T_MAX)
        return ThermoState(Region.SUPERHEATED_VAPOR, p, T, h,
                           _region2(p, T).s)

    # Above the 623.15 K saturation pressure there is no dome within the
    # implemented regions: region 1 below 623.15 K, region 3 between the
    # 623.15 K isotherm and the B23 line, region 2 beyond it.
    h1_max = _region1(p, T_REGION1_MAX).h
    if h <= h1_max:
        T = _invert_t(_region1, p, h, _backward1_t_ph(p, h),
                      T_MIN, T_REGION1_MAX)
        return ThermoState(Region.COMPRESSED_LIQUID, p, T, h, _region1(p, T).s)
    n = _B23_N
    t_b23 = n[3] + math.sqrt((p - n[4]) / n[2])
    h2_min = _region2(p, t_b23).h
    if h < h2_min:
        raise PropertyDomainError(
            f"(p = {p:g} MPa, h = {h:g} kJ/kg) falls in IF97 region 3, "
            "which is not implemented")
    T = _invert_t(_region2, p, h, _backward2_t_ph(p, h), t_b23, T_MAX)
    return ThermoState(Region.SUPERHEATED_VAPOR, p, T, h, _region2(p, T).s)


def dead_state(p0: float, T0: float) -> tuple[float, float]:
    """Enthalpy and entropy of liquid water at the ambient (dead) state.

    The reference environment must be compressed liquid; vapor or two-phase
    ambients are rejected.

    Returns
    -------
    (h0, s0) : tuple of float
        [kJ/kg] and [kJ/(kg K)] at (p0 [MPa], T0 [K]).
    """
    if not (math.isfinite(p0) and math.isfinite(T0)):
        raise PropertyDomainError(f"non-finite ambient p0 = {p0!r}, T0 = {T0!r}")
    if not T_MIN <= T0 <= T_REGION1_MAX:
        raise PropertyDomainError(
            f"ambient temperature {T0:g} K outside liquid range "
            f"[{T_MIN}, {T_REGION1_MAX}] K")
    if not 0.0 < p0 <= P_MAX:
        raise PropertyDomainError(
            f"ambient pressure {p0:g} MPa outside (0, {P_MAX}] MPa")
    p_sat = saturation_pressure(T0)
    if p0 <= p_sat * (1.0 + TWO_PHASE_REL_TOL):
        raise PropertyDomainError(
            f"ambient state (p0 = {p0:g} MPa, T0 = {T0:g} K) is not liquid "
            f"water: saturation pressure at T0 is {p_sat:g} MPa")
    props = _region1(p0, T0)
    return props.h, props.s
