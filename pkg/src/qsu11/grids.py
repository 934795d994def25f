"""Published parameter grids used by the tests and the report harness.

The verification suites must be reproducible byte for byte, so no grid
is drawn at run time.  The pseudorandom grids below were generated once
(seeded, then filtered away from the guard bands of the relevant pole
sets) and committed as literals; the remaining grids are short
deterministic enumerations written out in code where they are used.

``THETA_GRID`` entries are ``(Re a, Im a, k)`` with ``0.5 <= |a| <= 2``
and ``-5 <= k <= 5``, kept at relative distance > 1e-2 from every power
``base**j`` for each of the check bases (0.3, 0.5, 0.8), so residuals
are always well-conditioned in relative form.

``OVERLAP_GRID`` entries are ``(theta, kappa)`` with ``lam = e^{i
theta}``; both the direct series (argument ``-q^2/kappa``) and the
two-term continuation converge there (``q^2 < |kappa| < 1`` for the
default q), and ``lam**2`` stays away from ``q**(2 Z)``.

``RATIO_LAMBDA_GRID`` entries are ``(Re lam, Im lam)`` bounded away
from the pole set ``lam**2 in {1} union q**(2 Z)`` of the Pochhammer
ratio, where the naive and stable evaluations must agree.
"""

from __future__ import annotations

__all__ = ["THETA_BASES", "THETA_GRID", "OVERLAP_GRID", "RATIO_LAMBDA_GRID"]

THETA_BASES = (0.3, 0.5, 0.8)

THETA_GRID = (
    (1.071837017414, 0.97745046817, -3),
    (0.636725960057, -0.332824391594, 5),
    (-0.794935218802, 0.044886193187, 4),
    (-0.625458223637, -0.08770872677, 5),
    (0.483958554581, -0.421168202893, -4),
    (1.031348502858, -0.447509536441, -3),
    (-0.274461458235, 1.339882263046, 3),
    (0.65082894376, 0.123894933736, -3),
    (-0.355845165198, -1.572783044167, 3),
    (-1.198102837071, 1.016700977582, -1),
    (1.210589694588, 1.180173944035, 1),
    (0.075621237519, -1.378657670881, 0),
    (-0.845826838462, -0.971241623867, 5),
    (-1.134718537457, 1.472950826783, -1),
    (-0.095496069789, -1.045549959707, -3),
    (0.521911669517, -0.123506180411, 4),
    (1.590186358172, -0.481870367848, -5),
    (-0.782628989677, 1.572808160626, -3),
    (0.34159758874, -0.627024041842, -5),
    (0.892138018533, 1.66393329961, 5),
    (-1.071227370114, 0.517055124857, -5),
    (1.029018189169, -0.104763915425, 5),
    (-0.096404337669, -1.317764315596, 0),
    (0.307552552223, -0.685815588487, 3),
    (-0.950569908738, 0.751898935494, -3),
    (-1.659681629863, -0.677991687991, 4),
    (0.559446653726, -0.634252700515, 1),
    (-1.418395884725, 0.392491791964, -5),
    (0.049923657706, 1.135015846702, 2),
    (0.043693261839, 1.170054913146, 3),
    (-0.440106624134, -1.358766436005, -2),
    (-1.08546354627, 0.293904992033, 5),
    (-0.584726456784, -0.095057625392, -2),
    (-0.331475736752, -1.606512102771, 5),
    (0.516666885709, -0.366906861505, 3),
    (0.173941353479, -0.607127093303, 5),
    (0.07806345728, 0.740761457652, -5),
    (0.254932848352, -0.86024499758, 3),
    (0.818957154611, -0.665363824644, 5),
    (-0.854734412572, -1.131438164309, -2),
    (-0.830364094551, 0.893639975778, 0),
    (-0.046301795312, -0.91811262071, 2),
    (0.297506395882, -0.615737899715, 4),
    (0.586907502161, 1.127557589308, -2),
    (0.001524787752, -1.214962824376, -4),
    (0.325080890232, -0.942239666324, -4),
    (0.175623445608, 1.781497074931, 0),
    (0.538324467447, 0.154073830498, -4),
    (-1.207668986002, -1.465014951636, -3),
    (-0.515609861783, 0.69523188714, 3),
    (-1.034027773806, -0.179783991866, 1),
    (0.180229177185, -1.400789577948, 4),
    (-0.252740865544, -0.493587446982, 0),
    (-0.626443267122, 0.249254533203, 5),
    (0.282779662789, 0.93378574539, 4),
    (1.011783660911, -1.349543381803, 0),
    (0.253047435562, 1.258895088372, -4),
    (0.380120138529, -0.422032162071, 1),
    (-0.586378875632, -0.004704433412, -4),
    (-0.849071142109, -0.186926423194, -5),
    (-0.526589488189, 1.30132045828, -2),
    (-1.476712540863, 1.288272267369, -2),
    (-0.417386220144, 0.303904025596, -4),
    (-1.401629682826, -0.407039649393, 2),
    (-0.62385275103, -0.568441566346, 2),
    (-0.660471609917, -0.860049509558, -1),
    (-0.617491484254, 0.760362462237, 1),
    (0.513862902059, -0.353981120397, -3),
    (-0.327524367958, -0.865170802234, -2),
    (-0.476630394564, -0.207285768732, 3),
    (-0.119152084122, 0.530894898805, 1),
    (-1.090042875215, -0.528001308544, 3),
    (-0.52766985557, -0.396454174553, -3),
    (0.762367684257, 0.331567363614, -4),
    (0.380071996869, 0.720529016279, 2),
    (-0.186611896592, 0.600098050201, -5),
    (0.055787407415, 0.525975056835, -3),
    (-0.388888774122, -0.552554905057, 2),
    (0.7403423887, 1.110089869137, -3),
    (0.489900300407, -0.602459825657, -3),
    (-0.220512934972, -1.075767962187, 1),
    (0.230605581586, -1.227422458531, -1),
    (0.251629450746, 0.865200864448, -2),
    (0.522153307972, -1.244663692238, -4),
    (-0.959306408828, 0.609772213523, -1),
    (0.879072831015, -0.16415813101, -2),
    (-1.139079435544, -0.372103171532, 3),
    (-0.54207909009, -0.310249589066, 4),
    (-0.107044012152, 0.633619192759, -5),
    (0.332403014141, -1.187226924291, -5),
    (0.656174283445, -0.72312013566, 2),
    (-0.707138226176, 0.360904268935, -4),
    (-0.645427966332, -0.217703743888, 2),
    (0.968723977306, -0.192766855631, -4),
    (0.506524435057, 0.337080299905, -5),
    (-0.583561980727, 0.260715963518, -4),
    (0.263995324293, -0.682167983479, -1),
    (-1.464316796628, -0.720951986456, 1),
    (0.086885281342, -1.90473203656, 3),
    (0.400207996465, -0.995145992496, 3),
)

OVERLAP_GRID = (
    (0.522426877674, 0.77729117875),
    (1.134876380338, -0.771518741928),
    (2.726143448583, 0.492246874398),
    (0.793654734848, -0.680562517701),
    (0.370339697632, 0.58446379481),
    (2.607782346306, -0.786653953371),
    (0.435686413339, 0.683083964076),
    (2.380267431393, -0.584537773606),
    (2.564577966311, 0.646517721217),
    (0.337369403899, -0.552555512588),
    (1.642935665915, 0.518645997536),
    (0.652679674648, -0.555566406125),
    (1.602663477492, 0.374897503552),
    (2.139547627683, -0.496023565926),
    (2.22625820952, 0.589036791856),
    (2.617294504137, -0.687926382284),
    (2.168755334784, 0.771946505418),
    (2.11372185508, -0.75313231513),
    (0.32646594482, 0.731641882492),
    (1.216631210369, -0.555892884131),
)

RATIO_LAMBDA_GRID = (
    (0.028450135994, 0.715665333459),
    (-1.711556464792, 0.754612752644),
    (-1.140944706144, 0.477981170116),
    (0.362401719948, 1.756655192859),
    (1.312173241678, 0.786678403468),
    (0.736843967628, 0.636703112441),
    (0.338959059537, 1.186887283069),
    (-0.680345363476, 0.43481157932),
    (1.243294245217, 0.640654745297),
    (0.092385981818, 0.941712733878),
    (0.966419522596, 0.959929396408),
    (-1.76377987573, 0.364935970525),
)
