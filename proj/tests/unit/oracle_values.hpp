#pragma once

// Generated by tests/oracles/gen_oracles.py; do not edit by hand.

#include <array>

#include "nikitin/types.hpp"

namespace oracle_values {

using nikitin::Complex;

inline const Complex kLnGammaHalfPlusI = Complex{-0.6527906442043729, -0.9550077243425691};
inline const Complex kKummerGeneric = Complex{1.2457725722192148, -0.04937760372939674};
inline const double kTricomiOneOneOne = 0.5963473623231941;
inline const Complex kKummerDerivativeFd = Complex{0.3632155681771868, 0.26738299015791545};
inline const Complex kTricomiDerivativeFd = Complex{-0.10688942041305463, 0.05720901972902897};
inline const double kOmegaIntegralFig2 = 90.66060064080918;  // A=2, alpha=1, beta=1.5, eps=0.5 on [-2, 3]

struct HypergeometricSample {
  Complex mu, gamma, z, m, u, dm, du;
};

inline const std::array<HypergeometricSample, 49> kHypergeometric{{
    {Complex{1.019587520862983, 0.8127261252161504}, Complex{1.2212375666280835, -1.0504793517533892}, Complex{-0.8995869416042519, 1.1199274381101385},
     Complex{0.4102037706063447, -0.2989633389433223}, Complex{-1.3164399832310996, -0.5707398535713125}, Complex{0.07966900897580802, 0.22449916568922462}, Complex{0.39448765066159264, -0.5058632886762516}},
    {Complex{0.3366416025374168, -0.8051950402332959}, Complex{2.2271979565191007, 1.2038374228990545}, Complex{-0.23167942140924697, -0.08994553104873074},
     Complex{0.9759546980248062, 0.07807728064113013}, Complex{0.1653337129836731, 4.911183014366333}, Complex{-0.013392644749537216, -0.3132914327394863}, Complex{1.1741621604701276, -0.7826651844371184}},
    {Complex{0.39531618634004473, -0.6016617115690426}, Complex{2.044157893970896, -0.954969962132552}, Complex{0.029944478462127014, -0.054330422685079816},
     Complex{0.9987588807164247, -0.019869177392534274}, Complex{-18.209790530305526, -21.49900931384977}, Complex{0.27002083958629697, -0.17681785313852733}, Complex{245.81640312170632, 575.2406441814724}},
    {Complex{0.08728220499781214, -0.5967036897325287}, Complex{1.596175707589405, -0.8696750070547807}, Complex{1.4249553088861358, 1.3275302246929501},
     Complex{1.9268611602143455, 0.13107098904587028}, Complex{0.508918610188601, 0.12286767687101396}, Complex{0.6473578170076164, -0.21649332266515356}, Complex{0.10190107824050008, 0.15919906132709843}},
    {Complex{1.3254420657376245, -0.37678985120543507}, Complex{2.845224594523462, 1.019295371892647}, Complex{0.13271867551685107, 0.47497244309488107},
     Complex{1.172405120691515, 0.1756695656446168}, Complex{6.762011382335905, -7.443658903388635}, Complex{0.5048943611810155, -0.20842955213902933}, Complex{10.681179844711565, 40.41412653721752}},
    {Complex{1.8626882163266094, 0.21426655184772847}, Complex{1.4888874163423669, -0.36877060915970317}, Complex{1.631017159383935, 0.34882381828840237},
     Complex{3.7900644593901704, 4.646646873806076}, Complex{0.12102663449070311, -0.11971223406692084}, Complex{3.4277631777300144, 6.09820048793919}, Complex{-0.07652712428006264, 0.1101209170418148}},
    {Complex{1.8378725988537634, 0.5595148143515134}, Complex{2.5637060856486156, 0.4974301647781365}, Complex{0.3723560191590052, -0.6536721900225719},
     Complex{1.2225609940028337, -0.6067464391945483}, Complex{-0.17240359916058276, 0.7532890248596555}, Complex{0.9300901477448947, -0.4053949226945969}, Complex{1.7773873249340055, -0.07200046972695613}},
    {Complex{1.8976670751938847, 0.5965223800870141}, Complex{1.5749010150672733, -1.2140125558048735}, Complex{0.19287023548915724, 0.8074521831686576},
     Complex{0.396145451734219, 0.2978429857127259}, Complex{-0.3975491145343402, -0.0566430058243788}, Complex{-0.16034258152844935, 0.6593656810740123}, Complex{0.20309978431086265, -0.36497956512061513}},
    {Complex{0.32789491469915655, 1.1368589191083514}, Complex{0.8795779925216927, 0.3099103014105191}, Complex{-1.2339965200597585, -0.5904992389082384},
     Complex{0.2568674575650402, -1.0111239259541054}, Complex{-0.0006651031606074806, 0.1519348826687201}, Complex{0.7328321692865117, -0.02575092401796301}, Complex{0.039411001346892245, 0.19762529259143344}},
    {Complex{1.1514323086746985, 0.5099696134916587}, Complex{2.3129926939405183, 0.6793199552372897}, Complex{-1.371903661436142, 0.30098484014776494},
     Complex{0.5116991700808631, 0.009871140844021095}, Complex{-2.8892240050719686, 1.9640986712304562}, Complex{0.21334265524786822, 0.05888786270337052}, Complex{-3.569421004016869, 0.21024884962682647}},
    {Complex{1.780744388902061, -0.496696744032715}, Complex{1.90078901083572, 1.3502952807568613}, Complex{0.3218297172302412, -0.3782562495992459},
     Complex{0.8412416377957144, -0.36547789655290397}, Complex{-0.692022515111623, 0.321907817930526}, Complex{0.18714441126354311, -0.8045140110221661}, Complex{0.9669324714179358, 0.9713380714690962}},
    {Complex{1.4297019862974998, 0.6786925529778789}, Complex{1.6222342854351588, -1.3632622014451936}, Complex{-1.281417543674437, 0.8420902393793391},
     Complex{0.4023553523631633, -0.2781922295343431}, Complex{-0.6572466223393443, 0.3326253473408787}, Complex{0.16694892821391663, 0.16622073616845365}, Complex{-0.21037734870464087, -0.2791610550250144}},
    {Complex{1.727222473827985, 0.7291711550841797}, Complex{2.690012076342557, 0.8131273713360994}, Complex{2.957089246400505, 2.842818308378712},
     Complex{-5.678279844326832, 4.5980283051476825}, Complex{-0.10334949483092046, -0.11131536419524138}, Complex{-5.2700501589102595, 3.3523054838700306}, Complex{0.062048855179246666, 0.03153554118641454}},
    {Complex{0.6345631678640478, 0.3658126957080494}, Complex{2.0847708845448722, -1.2401036417823872}, Complex{3.6796695918229783, -8.07115176600952},
     Complex{-7.822816747839069, -0.5846180983101599}, Complex{0.18955165519617911, -0.0071195992093612825}, Complex{-5.35190502830742, 0.9437367773275485}, Complex{-0.00017814337744393406, -0.018676137331257083}},
    {Complex{0.5972543147824345, -0.372249482979111}, Complex{0.7872338405965027, -0.834371920867749}, Complex{-5.85788628114117, 1.012683111457786},
     Complex{0.1650390012201243, 0.007671101712679719}, Complex{0.06269519108250594, -0.11501385458902409}, Complex{0.022209788074443328, -0.0028997003513305687}, Complex{0.005447013681313634, -0.016868783693031984}},
    {Complex{1.229157425681298, -0.9430766884035165}, Complex{1.2841165713534344, -1.3266321180327774}, Complex{8.5502864899185, 3.0154672696371945},
     Complex{-2545.2454121330607, -1507.8758988986124}, Complex{-0.0072060182739529305, 0.04181010790229881}, Complex{-2488.1423581724234, -1623.0484015195723}, Complex{-0.004926031683308437, -0.004431695539726641}},
    {Complex{1.9083296945950168, -1.345896369839502}, Complex{1.6688482546690269, 0.7722820670352348}, Complex{4.00704914518869, 7.317364071932759},
     Complex{-456.4947682648143, -520.3839170261668}, Complex{0.002207767691651938, 0.006442595861719128}, Complex{-488.1393824370129, -339.7141125452296}, Complex{-0.0019297434022208307, 0.00037161638808514037}},
    {Complex{1.5258881351219467, -0.37428057853615826}, Complex{2.7357385113485115, -1.2065284264678453}, Complex{-7.541516751241739, -0.5986637012501138},
     Complex{0.07960981784927396, -0.02404405375183095}, Complex{0.1171818462747652, -0.08485233165716903}, Complex{0.014814980956557531, -0.00704296816906578}, Complex{0.02175956610318639, -0.019890768012134408}},
    {Complex{1.2736361956815403, -0.9985962908670408}, Complex{1.3748512413668024, 1.2519722406815692}, Complex{-4.275986502827619, 3.05887431962943},
     Complex{-1.247419608653058, 0.7955721495515561}, Complex{-0.025439550546326375, -0.013425585179090127}, Complex{-0.12166727094998864, 0.486563623275074}, Complex{-0.013766701130001033, -0.015296541416519639}},
    {Complex{0.992783648051589, -1.275988042055988}, Complex{2.0292647359075415, -0.2234466792857701}, Complex{-7.881637719046771, -4.852187953420346},
     Complex{-0.07106920510979683, 0.057167642361184975}, Complex{1.6341630003523122, -1.8851995565256268}, Complex{0.008736702236601128, 0.01171163025354262}, Complex{-0.2921815775201393, -0.27243312514450924}},
    {Complex{1.9883244380585614, -0.2592763474688251}, Complex{1.7395001567580262, 0.4156407129736319}, Complex{-0.8079378840036479, 4.314232039510678},
     Complex{-0.9483751189771349, -1.1489304842771328}, Complex{-0.03452589232785574, -0.023817454308440497}, Complex{-0.9288848394483404, -0.8367013282048223}, Complex{0.010165765532705094, -0.016377022769867928}},
    {Complex{0.537725521331019, 0.12762592350966018}, Complex{2.6359188423511792, -1.2331219044036823}, Complex{1.5696392641215748, -4.143954115979176},
     Complex{1.1419419972229647, -1.3133219792087283}, Complex{0.4087838495196935, 0.25330723353331375}, Complex{0.25321104922298665, -0.434054339782338}, Complex{0.0366607339164603, -0.08011528812028738}},
    {Complex{0.05454528281850324, 0.6834869258599299}, Complex{1.5194995410131318, 0.5558786584347866}, Complex{7.312178810080015, -3.716210598200799},
     Complex{39.135383682136414, -65.12137725971826}, Complex{0.12672900200074422, -0.6322315871812859}, Complex{25.072385130109456, -51.89101044288767}, Complex{-0.047237635925470325, -0.03186148445803806}},
    {Complex{1.1641292874728562, -0.11301624602336702}, Complex{0.6626201614084153, -1.4769597104341932}, Complex{5.812006598964894, -6.495731322401797},
     Complex{-873.0364338329014, 176.10952329067248}, Complex{0.04598316935985899, 0.06946278601632225}, Complex{-832.4365600977601, 37.26775534206098}, Complex{-0.0003135657940061555, -0.010779479271561988}},
    {Complex{0.9287176939476693, -0.5521144732881405}, Complex{1.4256106841294176, 0.6561215274928673}, Complex{-23.275147536145624, 11.151489459265019},
     Complex{-0.12239142754962809, 0.002718576927372611}, Complex{0.008104195672256672, -0.007761100587086405}, Complex{-0.005284841927342281, 0.0007967973855365858}, Complex{0.0003078750640059649, -0.0003810447715650348}},
    {Complex{0.8165060621144167, 0.3710832609563559}, Complex{2.546065873846566, 0.9459466252440931}, Complex{-19.46258163949467, 27.261642174462406},
     Complex{0.055859838622322876, 0.0009427180272260082}, Complex{-0.1296709345807164, -0.003566573557086181}, Complex{0.00030501446434031304, 0.001468187248393419}, Complex{-0.0006719631214357337, -0.0034163292312463975}},
    {Complex{0.5980262083006254, 0.33452980281831346}, Complex{0.6751358615275567, 0.05987138180207929}, Complex{10.231778952826112, -5.5123180046941185},
     Complex{-7942.625948035176, 27105.20510569907}, Complex{0.16127661550048406, -0.10441273291400095}, Complex{-8308.951024905062, 26474.33971580677}, Complex{-0.009932812270481425, -0.004001819194786542}},
    {Complex{0.21078170466549206, 0.8598881587623719}, Complex{2.338581270514553, 0.5328284304413518}, Complex{-6.845237275925118, -17.23225527039246},
     Complex{-0.9651174351914855, -1.1935647065704087}, Complex{-0.04757872108191328, -0.08279569969327343}, Complex{-0.0333153921651639, -0.06481567966241547}, Complex{-0.0014103665997311553, -0.0043090902401920475}},
    {Complex{0.13857651998764164, 0.9011743377236794}, Complex{0.7011169518007195, 0.3868065066326052}, Complex{-22.323734955346797, -17.820832351706184},
     Complex{-0.5950251289286667, 1.0235736742206507}, Complex{-0.060081475852112085, -0.03166925849701912}, Complex{-0.03706943142566406, 0.011257919026856375}, Complex{-0.000733420099560117, -0.0020978584858914635}},
    {Complex{1.4047990970073334, 1.3169458136287924}, Complex{0.9572945645896989, -1.1836897605817889}, Complex{16.725250583105097, -30.261941273268274},
     Complex{-1143842645.286503, -206270504.93658456}, Complex{-0.001966225159135086, 0.00016514919265303959}, Complex{-1068268779.7806748, -251180412.99140134}, Complex{-9.973438920422086e-06, 0.00011331409325374623}},
    {Complex{0.7422726744891623, 0.6308665650579042}, Complex{2.471300165413401, -0.37989677001786726}, Complex{11.158695712814067, -8.718915935636117},
     Complex{20.193731321834427, 2302.964186153996}, Complex{0.040738069932259244, -0.09102260838463741}, Complex{55.69897545436844, 1959.474337740387}, Complex{-0.007288860537500875, -0.0013636344008315087}},
    {Complex{0.933748963283211, 0.5624124517409976}, Complex{2.074568318157271, 1.1702621879591275}, Complex{-22.080153599370053, 10.56396476535484},
     Complex{0.031161617769771503, -0.021222800813441134}, Complex{-0.08629401323742027, 0.21817107165532992}, Complex{0.0015802335979193142, 0.0006022779599363093}, Complex{-0.010241456791965862, 0.0024207944744945005}},
    {Complex{0.5008896309307782, -1.2896646853901212}, Complex{2.299119078575183, -0.7686674226474707}, Complex{4.899718198791448, 32.595460569813625},
     Complex{-0.2234267022084785, -0.14506630419313782}, Complex{-0.022229614956051896, -0.01578036456915311}, Complex{-0.23543240157110798, 1.5851918615651204}, Complex{-0.000513990645990188, -0.0010494084003061974}},
    {Complex{1.6961914797162714, 1.244548711725486}, Complex{1.295338552295838, -0.9998019381972835}, Complex{25.8968892944018, -2.6481312959028465},
     Complex{-308809682951.4077, -709728578501.5383}, Complex{-0.002110753793909826, 0.002890492208728227}, Complex{-252019920406.63864, -743252488392.8574}, Complex{0.00026514083422620675, -7.710055632462506e-05}},
    {Complex{0.9546366188811488, 0.8623990622207143}, Complex{1.461250078510906, 1.0269594837761158}, Complex{22.651473053057853, 18.318607291774832},
     Complex{740781147.5779089, -1059840955.5218369}, Complex{-0.06455069965847275, 0.028051237071250897}, Complex{735717460.3081846, -1037203397.6874747}, Complex{0.002901680429950935, -0.0010313065240086699}},
    {Complex{-0.47467283489281875, 0.43887344524281446}, Complex{0.8877667499377653, 1.100263392963245}, Complex{-4.88421645986658, 8.8577675543942},
     Complex{-0.3609897112726617, -1.1613173092547209}, Complex{7.518688731678735, 0.12996081299186282}, Complex{0.0036369884931314895, 0.0812556450040747}, Complex{-0.48242734367267165, -0.13689743957837797}},
    {Complex{1.2300435712715823, 0.14632611169622267}, Complex{2.2397050382224917, 1.3104727189187284}, Complex{-50.70247466876697, 29.06309688988911},
     Complex{0.004423944396828016, 0.00946016891709705}, Complex{-0.0076590245462164535, 0.006425923041681873}, Complex{-4.082571088012248e-05, 0.00021991102668934037}, Complex{-0.00021348452856433562, 1.649045901725436e-05}},
    {Complex{1.996100746170252, 0.3465380783225942}, Complex{2.9844959652071097, -0.6894515967613551}, Complex{-21.800394649286563, -40.43608734932449},
     Complex{-0.0008049159456549876, 0.0024735049102186}, Complex{-0.00023201148517977592, 7.628321769982772e-05}, Complex{6.42308276088642e-05, 9.804373352777614e-05}, Complex{-3.862004217870906e-06, 1.0305209151499909e-05}},
    {Complex{1.238229955020062, 1.0409540635219665}, Complex{0.716099579502087, 1.0639337082054716}, Complex{5.124882268772621, 42.36458832741683},
     Complex{42.89652035124422, -1136.3134702674752}, Complex{0.033894251932458506, 0.02407173343627969}, Complex{29.400815473817165, -1137.8991851133367}, Complex{-0.0015590870057712429, 0.00015625348412873585}},
    {Complex{0.6858989544184584, 0.6988769573431384}, Complex{2.0310853625728718, 0.4360854120764279}, Complex{14.613163754380306, -47.72052809922451},
     Complex{20190.447939299724, -3585.3759773176102}, Complex{-0.007773595115822075, -0.027041954268988495}, Complex{19838.561448399458, -4036.3000028967576}, Complex{-0.0005423841251603567, -0.0001227422324400996}},
    {Complex{-0.23634517194289006, -0.2833475445453215}, Complex{2.484845972828839, 0.05942742060370998}, Complex{30.6173832613935, -47.94591844655191},
     Complex{36231967.076147564, 98638674.0819039}, Complex{2.163175232737937, 2.715810675069125}, Complex{39881197.31489827, 95079658.2773872}, Complex{-0.02149008445815864, 0.0075217080051691735}},
    {Complex{1.4826708638815802, 1.4148147586724047}, Complex{0.7792552254115402, -0.008388053097009962}, Complex{49.47644074646054, -1.7841181470846146},
     Complex{-1.357283028063879e+23, -4.5478892267600966e+22}, Complex{0.0021589614228978158, 0.0019243550884201314}, Complex{-1.3630934300755574e+23, -4.998615513125119e+22}, Complex{-8.294930152647502e-06, -0.0001156023417450907}},
    {Complex{-0.2638319325675388, 0.2611251949845843}, Complex{1.9914284861018525, 1.2257091255538706}, Complex{9.824023327158741, 45.96590594801549},
     Complex{0.08228065702575038, -3.6953112449446923}, Complex{3.1706147425847973, -2.3309884311069684}, Complex{0.020134724060708032, -2.3900854383826045}, Complex{-0.03000836851520928, -0.01079553727456565}},
    {Complex{0.26178064462209627, 0.479005366759393}, Complex{1.4320624477919144, 0.07106063307048016}, Complex{-26.57179803439743, -43.29699353693661},
     Complex{-0.39351981065967434, -0.4747279455102367}, Complex{0.031834579500580426, -0.12521749985840175}, Complex{-0.003949636844737783, -0.0053638806507268115}, Complex{0.0004209812321161324, -0.0013307038356923655}},
    {Complex{0.4, 0.3}, Complex{1.0, 0.0}, Complex{0.0, 3.0},
     Complex{0.12239320442645636, -0.009851756042673656}, Complex{0.557199422041395, -0.7830369873920582}, Complex{-0.2144167217504108, 0.03571767169855178}, Complex{0.03360338829298589, 0.13993192018523054}},
    {Complex{0.4, 0.3}, Complex{2.0, 0.0}, Complex{-0.0, -7.5},
     Complex{0.3051460929474943, -0.7363129950200688}, Complex{0.27658920693851735, 0.019339607424069906}, Complex{-0.05542570374832461, -0.02803541466366088}, Complex{0.013843659510117885, -0.013750355313866251}},
    {Complex{1.2, -0.5}, Complex{3.0, 0.0}, Complex{12.0, 0.5},
     Complex{2954.3271054903557, -3425.4571214205953}, Complex{0.019347618642516575, 0.051021443394845115}, Complex{2379.1970308414598, -3051.6269730654262}, Complex{-0.004318559341783164, -0.004526669370349473}},
    {Complex{0.25, 0.7}, Complex{1.0, 0.7}, Complex{-0.0, -20.0},
     Complex{-0.7319408418038272, -0.2135789433090735}, Complex{-0.021700960308588948, -0.15736974830363368}, Complex{0.010499379688736186, 0.07101769483817812}, Complex{-0.002791015021372505, -0.005196437140929323}},
    {Complex{0.6, 0.2}, Complex{1.5, 0.8}, Complex{0.0, 1330.0},
     Complex{0.009176188113917214, -0.00207894141391454}, Complex{-0.01324961748930875, -0.012609862399114316}, Complex{0.000877160644012159, -0.0016952997790907222}, Complex{7.684858149031117e-06, -4.0823102397163614e-06}},
}};

struct PropagatorSample {
  double A, alpha, beta, epsilon, Delta, t0, t;
  std::array<std::array<Complex, 2>, 2> u;
};

inline const std::array<PropagatorSample, 5> kPropagators{{
    {2.0, 1.0, 1.5, 0.5, 0.5, -5.0, 0.0,
     {{{Complex{1.3880099265873496, 0.5911966695496207}, Complex{0.5654847822156226, 0.5010735774033486}}, {Complex{-0.45381196523621486, -0.14814178875250114}, Complex{0.41777248460977323, -0.402123070504374}}}}},
    {2.0, 1.0, 1.5, -0.5, -0.5, -5.0, 2.5,
     {{{Complex{-1.387228593258463, -0.12367654788948398}, Complex{1.2107192819406443, -0.7680497338534221}}, {Complex{0.030062520641432458, -1.0097181858809239}, Complex{-0.10715922415196216, 0.9074408334610244}}}}},
    {2.0, 1.0, 1.5, 0.2, 0.7, -5.0, 5.0,
     {{{Complex{1.7048188922523704, 0.15679253916072292}, Complex{1.0435687268381941, 0.5176003373147356}}, {Complex{0.26576987927749746, -0.9165733670325092}, Complex{0.975111183376073, -0.570051684286336}}}}},
    {2.0, 1.0, 0.5, -1.3, 0.5, -5.0, 5.0,
     {{{Complex{-0.4744264217316437, 0.7987354536354185}, Complex{-0.41645814278246807, 0.1598572058968385}}, {Complex{1.5204531449551908, -1.77850928302445}, Complex{0.5524999078758321, -1.143335984215896}}}}},
    {1.0, -15.0, 0.0, 1.0, 0.8, -0.3, 0.2,
     {{{Complex{-1.0012173602923085, 0.1338340412041292}, Complex{-0.06923867346031355, 0.20100311945740315}}, {Complex{-0.18038704348253906, 0.11629393973975723}, Complex{-0.9763814932786896, -0.0862576777618525}}}}},
}};

}  // namespace oracle_values
