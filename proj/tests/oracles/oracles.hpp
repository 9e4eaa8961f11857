#pragma once

// Generated by generate_oracles.py. Do not edit by hand.

namespace oracle {

inline constexpr double kGaussianL2 = 0.84089641525371454303;
inline constexpr double kGaussianL1 = 1;
inline constexpr double kGaussianL4 = 0.84089641525371454303;
inline constexpr double kGaussianXWeightedL2 = 0.23721249916439717268;
inline constexpr double kGaussianBand4 = 1.5957691216057307118;
inline constexpr double kGaussianLeakFraction4 = 1.5417257900280018852e-8;
inline constexpr double kDb2Filter[] = {0.48296291314453416, 0.8365163037378079, 0.2241438680420134, -0.12940952255126037};
inline constexpr double kDb3Filter[] = {0.33267055295008263, 0.8068915093110925, 0.45987750211849154, -0.13501102001025458, -0.08544127388202666, 0.03522629188570953};
inline constexpr double kDb4Filter[] = {0.2303778133088965, 0.7148465705529157, 0.6308807679298589, -0.027983769416859854, -0.18703481171909309, 0.030841381835560764, 0.0328830116668852, -0.010597401785069032};
inline constexpr double kDb5Filter[] = {0.16010239797419293, 0.6038292697971896, 0.7243085284377729, 0.13842814590132074, -0.24229488706638203, -0.032244869584638375, 0.07757149384004572, -0.006241490212798274, -0.012580751999081999, 0.0033357252854737712};
inline constexpr double kDb6Filter[] = {0.11154074335010947, 0.49462389039845306, 0.7511339080210954, 0.31525035170919763, -0.22626469396543983, -0.12976686756726194, 0.09750160558732304, 0.027522865530305727, -0.03158203931748603, 0.0005538422011614961, 0.004777257510945511, -0.0010773010853084796};
inline constexpr double kDb7Filter[] = {0.07785205408500918, 0.3965393194819173, 0.7291320908462351, 0.4697822874051931, -0.14390600392856498, -0.22403618499387498, 0.07130921926683026, 0.08061260915108308, -0.03802993693501441, -0.01657454163066688, 0.01255099855609984, 0.0004295779729213665, -0.0018016407040474908, 0.00035371379997452024};
inline constexpr double kDb8Filter[] = {0.05441584224310401, 0.31287159091429995, 0.6756307362972898, 0.5853546836542067, -0.015829105256349306, -0.2840155429615469, 0.0004724845739132828, 0.12874742662047847, -0.017369301001807547, -0.044088253930794755, 0.013981027917398282, 0.008746094047405777, -0.004870352993451574, -0.00039174037337694705, 0.0006754494064505693, -0.00011747678412476953};
inline constexpr double kDb9Filter[] = {0.038077947363878345, 0.24383467461259034, 0.6048231236901112, 0.6572880780513005, 0.13319738582500756, -0.2932737832791749, -0.09684078322297646, 0.14854074933810638, 0.03072568147933338, -0.06763282906132997, 0.00025094711483145197, 0.022361662123679096, -0.004723204757751397, -0.00428150368246343, 0.0018476468830562265, 0.00023038576352319597, -0.0002519631889427101, 3.93473203162716e-05};
inline constexpr double kDb10Filter[] = {0.026670057900555554, 0.1881768000776915, 0.5272011889317256, 0.6884590394536035, 0.2811723436605775, -0.24984642432731538, -0.19594627437737705, 0.12736934033579325, 0.09305736460357235, -0.07139414716639708, -0.029457536821875813, 0.033212674059341, 0.0036065535669561697, -0.010733175483330575, 0.001395351747052901, 0.001992405295185056, -0.0006858566949597116, -0.00011646685512928545, 9.358867032006959e-05, -1.3264202894521244e-05};
inline constexpr double kDb4SamplePoints[] = {0.5, 1.0, 1.75, 2.25, 3.0, 4.125, 5.5};
inline constexpr double kDb4Phi[] = {0.3281394313733508, 1.0071699777256014, 0.5362551559984563, -0.302057031703666, 0.03961046271590312, -0.019162955733493928, 0.00012142423810055919};
inline constexpr double kDb4Psi[] = {-0.01509444571003399, -0.04632991678545919, 0.1357997706007915, 0.20688192473691355, -0.8872385343656812, -0.7686699132311877, 0.002604998528442366};
inline constexpr double kPyramidSignal[] = {0.0, 0.20311377523950566, 0.4071961200864283, 0.6046424733950355, 0.7884672020106339, 0.9525820959190077, 1.0920390859672264, 1.203227507766238, 1.2840180474859495, 1.333847630878195, 1.3537418712701261, 1.3462741815973678, 1.3154631805511507, 1.2666124829325753, 1.2060992612670158, 1.1411200080598671};
inline constexpr double kPyramidApproxDb2[] = {0.5439502950897963, 0.47221435247026056, 1.0237807386907307, 1.4771022290378064, 1.7790029714870008, 1.9081517242493007, 1.8784295898181815, 1.876423603065005};
inline constexpr double kPyramidDetailDb2[] = {-0.1744244352932276, 0.007437500040124681, 0.014459493379364585, 0.018339271602780358, 0.018464303037480617, 0.014814847969118056, 0.007967075108748167, 0.5203140209267229};

} // namespace oracle
