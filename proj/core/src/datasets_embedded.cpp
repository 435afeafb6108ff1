#include "regimetest/data.hpp"

// Bundled quarterly series. Growth is 100 * dlog(level); levels for the
// GNP growth series are an index anchored at 100 one quarter before the
// first growth observation. See data/README.md for provenance and span
// notes.

namespace regimetest {
namespace detail {

const double khamilton84GNPLevels[] = {
    100.0, 102.62707923594101, 104.91217183202535, 105.3940620873476,
    106.42002196720465, 106.16353198753109, 107.11954006039771, 109.34245319301615,
    111.25446937404303, 112.30374656385206, 111.78299419556147, 110.88139309913913,
    109.34245329142436, 108.90719757488108, 110.2129647422886, 111.8296288310302,
    114.22353534090989, 115.47489546877733, 117.01383531802198, 118.03979520235386,
    117.80662249816264, 118.34291972517724, 118.42841638294766, 119.74195601568074,
    120.7290537755475, 120.65910196420086, 121.36639249661957, 119.48546596943777,
    117.06046984759341, 117.6900361306615, 120.47256369023728, 123.32504298719185,
    124.85621043845278, 127.23457203284146, 126.65164025988913, 127.73200707984492,
    129.92383047155053, 129.55075412310538, 129.67511288870182, 128.56365635738177,
    129.90051322442264, 131.51717730599367, 133.39810382673264, 136.39825912136834,
    138.18591651442347, 139.62381488181435, 140.92180956745986, 140.68863686104882,
    142.59288064569003, 144.5670761255678, 147.09311371598196, 148.15016331598588,
    151.46121577466528, 152.75921045140578, 154.29815026561536, 154.95880625309192,
    158.31649301237812, 160.60935790069834, 163.16648514150728, 166.92056546995616,
    170.22384547311992, 170.66687360297448, 172.41566877887985, 173.26286290711033,
    174.24218827707674, 175.2836929783215, 177.80973067499497, 178.81237325376858,
    180.88761038192393, 183.96549000320985, 185.3956159084802, 185.2168501654555,
    187.82061208977856, 188.07710205865462, 189.11860682813358, 188.36468174838143,
    187.20659070628503, 187.04336981114062, 189.32068989281134, 187.61075673257196,
    192.6472871826635, 192.6317423296682, 193.6188401414837, 193.6110677208586,
    197.85481108922917, 201.7021607486262, 203.80071503344575, 207.6247473733968,
    212.4980568501536, 213.04212646562627, 212.83227103876214, 214.73651475129185,
    213.5395615041609, 214.1458105660049, 211.35551061630213, 209.49790147538621,
    205.4018344137438, 207.49261628897239, 211.01352420664094, 213.95150037783145,
    217.9698432028291, 218.94139609981247, 219.8507696437129, 222.0425930129444,
    225.08938308820652, 228.71910471711755, 233.31260700023753, 232.71413038717685,
    234.76605014786833, 242.18094224232496, 244.2561793259896, 247.2874243631437,
    247.2951967784926, 247.06202409166985, 249.2927096917216, 248.8185918573932,
    251.31353971478438, 245.37540825317075, 245.53862913814442, 248.65537095453587,
    253.46650121430787, 252.61930702444286, 253.73853599436424, 250.19431098087043,
    246.41691331105088, 247.15529354878453, 245.1810980217792, 245.55417433706828,
    247.98694285187133, 253.3265975367585, 256.75423619926397, 260.93580003501745,
    268.1019745225314, 271.45966133167565, 272.84315271212824, 273.24731875612196
};
const double khamilton84GNPGrowth[] = {
    kNaN, 2.59316421, 2.20217133, 0.45827562,
    0.9687438, -0.24130757, 0.89647478, 2.05393219,
    1.73353648, 0.93871289, -0.46477833, -0.80983406,
    -1.39763689, -0.39886093, 1.1918416, 1.45620048,
    2.11808228, 1.08957863, 1.32390273, 0.87296367,
    -0.19773273, 0.45420215, 0.07221876, 1.1030364,
    0.82097489, -0.05795795, 0.58447772, -1.56192672,
    -2.05041027, 0.53637183, 2.33676839, 2.34014559,
    1.2339263, 1.8869648, -0.45920792, 0.84940469,
    1.70139849, -0.28756312, 0.09594627, -0.86080289,
    1.03447127, 1.23685944, 1.42004502, 2.22410631,
    1.30210173, 1.03517699, 0.9253425, -0.16559951,
    1.3444382, 1.37500131, 1.73222184, 0.71605635,
    2.21032143, 0.85333031, 1.00238776, 0.42725441,
    2.14368343, 1.43789184, 1.57959926, 2.27469826,
    1.95962656, 0.25992399, 1.01946914, 0.49016398,
    0.5636338, 0.5959546, 1.43082857, 0.56230122,
    1.15388393, 1.68722844, 0.77438205, -0.09647045,
    1.39600146, 0.13646798, 0.55223715, -0.39944872,
    -0.61671102, -0.08722561, 1.2101835, -0.90729755,
    2.64916158, -0.0080694, 0.51111895, -0.00401437,
    2.16821432, 1.92586732, 1.03504717, 1.85897219,
    2.32004929, 0.25570789, -0.09855274, 0.89073682,
    -0.55896485, 0.28350255, -1.31155407, -0.88278776,
    -1.97454941, 1.01275265, 1.68264723, 1.38271284,
    1.86073637, 0.4447377, 0.41449001, 0.99202275,
    1.36283576, 1.59970522, 1.98845816, -0.25684232,
    0.87786949, 3.1095655, 0.85324478, 1.23337317,
    0.00314302, -0.09433369, 0.89883322, -0.19036628,
    0.99772376, -2.39120054, 0.06649673, 1.26136017,
    1.91637838, -0.3348029, 0.44207108, -1.40664911,
    -1.52129889, 0.29919869, -0.80197448, 0.15204792,
    0.98585027, 2.13034606, 1.34397924, 1.61550522,
    2.70930099, 1.24461412, 0.50835466, 0.14802167
};
const RawDataset khamilton84GNP{"hamilton84GNP", 1951, 1, 136, khamilton84GNPLevels, khamilton84GNPGrowth};

const double kchp10GNPLevels[] = {
    100.0, 102.62707923594101, 104.91217183202535, 105.3940620873476,
    106.42002196720465, 106.16353198753109, 107.11954006039771, 109.34245319301615,
    111.25446937404303, 112.30374656385206, 111.78299419556147, 110.88139309913913,
    109.34245329142436, 108.90719757488108, 110.2129647422886, 111.8296288310302,
    114.22353534090989, 115.47489546877733, 117.01383531802198, 118.03979520235386,
    117.80662249816264, 118.34291972517724, 118.42841638294766, 119.74195601568074,
    120.7290537755475, 120.65910196420086, 121.36639249661957, 119.48546596943777,
    117.06046984759341, 117.6900361306615, 120.47256369023728, 123.32504298719185,
    124.85621043845278, 127.23457203284146, 126.65164025988913, 127.73200707984492,
    129.92383047155053, 129.55075412310538, 129.67511288870182, 128.56365635738177,
    129.90051322442264, 131.51717730599367, 133.39810382673264, 136.39825912136834,
    138.18591651442347, 139.62381488181435, 140.92180956745986, 140.68863686104882,
    142.59288064569003, 144.5670761255678, 147.09311371598196, 148.15016331598588,
    151.46121577466528, 152.75921045140578, 154.29815026561536, 154.95880625309192,
    158.31649301237812, 160.60935790069834, 163.16648514150728, 166.92056546995616,
    170.22384547311992, 170.66687360297448, 172.41566877887985, 173.26286290711033,
    174.24218827707674, 175.2836929783215, 177.80973067499497, 178.81237325376858,
    180.88761038192393, 183.96549000320985, 185.3956159084802, 185.2168501654555,
    187.82061208977856, 188.07710205865462, 189.11860682813358, 188.36468174838143,
    187.20659070628503, 187.04336981114062, 189.32068989281134, 187.61075673257196,
    192.6472871826635, 192.6317423296682, 193.6188401414837, 193.6110677208586,
    197.85481108922917, 201.7021607486262, 203.80071503344575, 207.6247473733968,
    212.4980568501536, 213.04212646562627, 212.83227103876214, 214.73651475129185,
    213.5395615041609, 214.1458105660049, 211.35551061630213, 209.49790147538621,
    205.4018344137438, 207.49261628897239, 211.01352420664094, 213.95150037783145,
    217.9698432028291, 218.94139609981247, 219.8507696437129, 222.0425930129444,
    225.08938308820652, 228.71910471711755, 233.31260700023753, 232.71413038717685,
    234.76605014786833, 242.18094224232496, 244.2561793259896, 247.2874243631437,
    247.2951967784926, 247.06202409166985, 249.2927096917216, 248.8185918573932,
    251.31353971478438, 245.37540825317075, 245.53862913814442, 248.65537095453587,
    253.46650121430787, 252.61930702444286, 253.73853599436424, 250.19431098087043,
    246.41691331105088, 247.15529354878453, 245.1810980217792, 245.55417433706828,
    247.98694285187133, 253.3265975367585, 256.75423619926397, 260.93580003501745,
    268.1019745225314, 271.45966133167565, 272.84315271212824, 273.24731875612196,
    275.8258579305718, 278.16123829505835, 282.5063004429988, 284.65041115454585,
    287.3855999292204, 288.5400927509433, 291.32201450457774, 292.7301012585358,
    294.35306968720136, 297.48323807038565, 300.06329136061595, 305.197535206661,
    306.77622597925506, 310.7162416948471, 312.3204269034236, 316.49075190586757,
    319.46218366437176, 321.8525632615394, 324.4051578574772, 325.11327297824494,
    328.50963928448704, 329.81525722993814, 329.81026474006677, 326.92067707781314,
    325.33699381534814, 327.5327890736777, 328.91251684828467, 330.2018887406295,
    333.8263545431245, 337.3733958305655, 340.854511698476, 344.4415338269357,
    345.07455698939253, 347.28230148577467, 349.1104121416946, 353.7207310055866,
    357.1643213553653, 362.0497591488061, 364.3817429832981, 368.42856524449843,
    369.3324105214514, 370.1263391771385, 373.2370695874631, 375.8393435498257,
    378.4138723635587, 384.95583466512824, 388.30436309711155, 392.5430279199254,
    395.5621338644965, 401.42691811368184, 406.46528160096824, 409.5836235122439,
    413.4528440845787, 417.1706940008965, 422.6751186942868, 429.99148983458747,
    433.8219572273468, 437.21316735552534, 442.77304142412635, 450.72583225687816,
    451.9039780224174, 460.71899640917775, 461.1041956481859, 463.8327550510643,
    462.3033753464619, 465.3348806716147, 464.05909489924727, 465.69814569282687,
    469.697866676634, 472.1901012515866, 474.54966654651594, 474.6476339297289,
    476.57076558139676, 480.3718918656505, 488.4235094446258, 492.8167368432103,
    496.28717205656045, 499.8144479947564, 503.4857695423549, 507.8541572577277,
    512.9215753991831, 515.1077130541552, 519.02059745184, 521.7028740182882,
    528.5466364247847, 530.4504937917864, 530.5918385460118, 534.4697345925499,
    536.074779164136, 540.3337822448689, 545.1270635859302, 547.9973360414683,
    546.9994928199701, 548.9801608713029, 545.2699224559375, 537.7942827043313,
    528.9342500646322, 527.9559675821387, 531.5913595714825
};
const double kchp10GNPGrowth[] = {
    kNaN, 2.59316421, 2.20217133, 0.45827562,
    0.9687438, -0.24130757, 0.89647478, 2.05393219,
    1.73353648, 0.93871289, -0.46477833, -0.80983406,
    -1.39763689, -0.39886093, 1.1918416, 1.45620048,
    2.11808228, 1.08957863, 1.32390273, 0.87296367,
    -0.19773273, 0.45420215, 0.07221876, 1.1030364,
    0.82097489, -0.05795795, 0.58447772, -1.56192672,
    -2.05041027, 0.53637183, 2.33676839, 2.34014559,
    1.2339263, 1.8869648, -0.45920792, 0.84940469,
    1.70139849, -0.28756312, 0.09594627, -0.86080289,
    1.03447127, 1.23685944, 1.42004502, 2.22410631,
    1.30210173, 1.03517699, 0.9253425, -0.16559951,
    1.3444382, 1.37500131, 1.73222184, 0.71605635,
    2.21032143, 0.85333031, 1.00238776, 0.42725441,
    2.14368343, 1.43789184, 1.57959926, 2.27469826,
    1.95962656, 0.25992399, 1.01946914, 0.49016398,
    0.5636338, 0.5959546, 1.43082857, 0.56230122,
    1.15388393, 1.68722844, 0.77438205, -0.09647045,
    1.39600146, 0.13646798, 0.55223715, -0.39944872,
    -0.61671102, -0.08722561, 1.2101835, -0.90729755,
    2.64916158, -0.0080694, 0.51111895, -0.00401437,
    2.16821432, 1.92586732, 1.03504717, 1.85897219,
    2.32004929, 0.25570789, -0.09855274, 0.89073682,
    -0.55896485, 0.28350255, -1.31155407, -0.88278776,
    -1.97454941, 1.01275265, 1.68264723, 1.38271284,
    1.86073637, 0.4447377, 0.41449001, 0.99202275,
    1.36283576, 1.59970522, 1.98845816, -0.25684232,
    0.87786949, 3.1095655, 0.85324478, 1.23337317,
    0.00314302, -0.09433369, 0.89883322, -0.19036628,
    0.99772376, -2.39120054, 0.06649673, 1.26136017,
    1.91637838, -0.3348029, 0.44207108, -1.40664911,
    -1.52129889, 0.29919869, -0.80197448, 0.15204792,
    0.98585027, 2.13034606, 1.34397924, 1.61550522,
    2.70930099, 1.24461412, 0.50835466, 0.14802167,
    0.939240246972517, 0.8431222368500357, 1.5499913364575235, 0.7560947026535203,
    0.9563067941808612, 0.4009178207507347, 0.9595188450980174, 0.48217939601151727,
    0.5528935739866014, 1.0577916660121645, 0.8635542829132703, 1.696579977682866,
    0.5159352817525331, 1.276151335619602, 0.5149580544561161, 1.3264351168576383,
    0.9344884553845745, 0.7454656791988867, 0.7899659182339036, 0.21804320484175577,
    1.0392526978691308, 0.3966490297244718, -0.0015137345979354677, -0.8799970050372252,
    -0.4856014563534572, 0.672662020935455, 0.4203639797180969, 0.39124422896374966,
    1.0916709746682685, 1.0569355265042546, 1.0265417859880444, 1.0468628590384554,
    0.18361379777385167, 0.6377497246457864, 0.5250241191419036, 1.3119466990481499,
    0.9688253462533325, 1.358569880162186, 0.6420403956367338, 1.104477749296251,
    0.24502400068371344, 0.21473245426548715, 0.836938846235924, 0.6947981234826983,
    0.68267227982588, 1.714011546601668, 0.8660860530211423, 1.085668340554946,
    0.76617204401348, 1.47176177580981, 1.247302253870508, 0.764257404176405,
    0.9402375786226713, 0.8952009121774296, 1.3108366865449028, 1.716157436950816,
    0.8868795717511091, 0.7786660186548389, 1.263644360829197, 1.780192698963745,
    0.2610475349184682, 1.93185856258129, 0.08357335001925037, 0.5900007164653331,
    -0.3302713380032074, 0.6535987703005119, -0.27454160608613165, 0.35257644037436364,
    0.8551982920579349, 0.5292010252050616, 0.4984622513504178, 0.02064215385182422,
    0.4043517814475095, 0.794435538282201, 1.6622298075029462, 0.8954497678535844,
    0.7017360710909415, 0.708219043205105, 0.7318523149864475, 0.8638865661898976,
    0.9928644671413522, 0.4253071337316783, 0.7567538827411013, 0.515464977792135,
    1.3032825454358132, 0.35955893813284234, 0.02664262315530408, 0.7282045058815356,
    0.2998559618191621, 0.7913399166394441, 0.8831847811689997, 0.5251514014275926,
    -0.1822550479431584, 0.36144287915647055, -0.6781361391523077, -1.380482973598518,
    -1.6611979742227945, -0.1851247642470355, 0.6862187581308632
};
const RawDataset kchp10GNP{"chp10GNP", 1951, 1, 235, kchp10GNPLevels, kchp10GNPGrowth};

const double kUSGNPLevels[] = {
    100.0, 102.62707923594101, 104.91217183202535, 105.3940620873476,
    106.42002196720465, 106.16353198753109, 107.11954006039771, 109.34245319301615,
    111.25446937404303, 112.30374656385206, 111.78299419556147, 110.88139309913913,
    109.34245329142436, 108.90719757488108, 110.2129647422886, 111.8296288310302,
    114.22353534090989, 115.47489546877733, 117.01383531802198, 118.03979520235386,
    117.80662249816264, 118.34291972517724, 118.42841638294766, 119.74195601568074,
    120.7290537755475, 120.65910196420086, 121.36639249661957, 119.48546596943777,
    117.06046984759341, 117.6900361306615, 120.47256369023728, 123.32504298719185,
    124.85621043845278, 127.23457203284146, 126.65164025988913, 127.73200707984492,
    129.92383047155053, 129.55075412310538, 129.67511288870182, 128.56365635738177,
    129.90051322442264, 131.51717730599367, 133.39810382673264, 136.39825912136834,
    138.18591651442347, 139.62381488181435, 140.92180956745986, 140.68863686104882,
    142.59288064569003, 144.5670761255678, 147.09311371598196, 148.15016331598588,
    151.46121577466528, 152.75921045140578, 154.29815026561536, 154.95880625309192,
    158.31649301237812, 160.60935790069834, 163.16648514150728, 166.92056546995616,
    170.22384547311992, 170.66687360297448, 172.41566877887985, 173.26286290711033,
    174.24218827707674, 175.2836929783215, 177.80973067499497, 178.81237325376858,
    180.88761038192393, 183.96549000320985, 185.3956159084802, 185.2168501654555,
    187.82061208977856, 188.07710205865462, 189.11860682813358, 188.36468174838143,
    187.20659070628503, 187.04336981114062, 189.32068989281134, 187.61075673257196,
    192.6472871826635, 192.6317423296682, 193.6188401414837, 193.6110677208586,
    197.85481108922917, 201.7021607486262, 203.80071503344575, 207.6247473733968,
    212.4980568501536, 213.04212646562627, 212.83227103876214, 214.73651475129185,
    213.5395615041609, 214.1458105660049, 211.35551061630213, 209.49790147538621,
    205.4018344137438, 207.49261628897239, 211.01352420664094, 213.95150037783145,
    217.9698432028291, 218.94139609981247, 219.8507696437129, 222.0425930129444,
    225.08938308820652, 228.71910471711755, 233.31260700023753, 232.71413038717685,
    234.76605014786833, 242.18094224232496, 244.2561793259896, 247.2874243631437,
    247.2951967784926, 247.06202409166985, 249.2927096917216, 248.8185918573932,
    251.31353971478438, 245.37540825317075, 245.53862913814442, 248.65537095453587,
    253.46650121430787, 252.61930702444286, 253.73853599436424, 250.19431098087043,
    246.41691331105088, 247.15529354878453, 245.1810980217792, 245.55417433706828,
    247.98694285187133, 253.3265975367585, 256.75423619926397, 260.93580003501745,
    268.1019745225314, 271.45966133167565, 272.84315271212824, 273.24731875612196,
    275.8258579305718, 278.16123829505835, 282.5063004429988, 284.65041115454585,
    287.3855999292204, 288.5400927509433, 291.32201450457774, 292.7301012585358,
    294.35306968720136, 297.48323807038565, 300.06329136061595, 305.197535206661,
    306.77622597925506, 310.7162416948471, 312.3204269034236, 316.49075190586757,
    319.46218366437176, 321.8525632615394, 324.4051578574772, 325.11327297824494,
    328.50963928448704, 329.81525722993814, 329.81026474006677, 326.92067707781314,
    325.33699381534814, 327.5327890736777, 328.91251684828467, 330.2018887406295,
    333.8263545431245, 337.3733958305655, 340.854511698476, 344.4415338269357,
    345.07455698939253, 347.28230148577467, 349.1104121416946, 353.7207310055866,
    357.1643213553653, 362.0497591488061, 364.3817429832981, 368.42856524449843,
    369.3324105214514, 370.1263391771385, 373.2370695874631, 375.8393435498257,
    378.4138723635587, 384.95583466512824, 388.30436309711155, 392.5430279199254,
    395.5621338644965, 401.42691811368184, 406.46528160096824, 409.5836235122439,
    413.4528440845787, 417.1706940008965, 422.6751186942868, 429.99148983458747,
    433.8219572273468, 437.21316735552534, 442.77304142412635, 450.72583225687816,
    451.9039780224174, 460.71899640917775, 461.1041956481859, 463.8327550510643,
    462.3033753464619, 465.3348806716147, 464.05909489924727, 465.69814569282687,
    469.697866676634, 472.1901012515866, 474.54966654651594, 474.6476339297289,
    476.57076558139676, 480.3718918656505, 488.4235094446258, 492.8167368432103,
    496.28717205656045, 499.8144479947564, 503.4857695423549, 507.8541572577277,
    512.9215753991831, 515.1077130541552, 519.02059745184, 521.7028740182882,
    528.5466364247847, 530.4504937917864, 530.5918385460118, 534.4697345925499,
    536.074779164136, 540.3337822448689, 545.1270635859302, 547.9973360414683,
    546.9994928199701, 548.9801608713029, 545.2699224559375, 537.7942827043313,
    528.9342500646322, 527.9559675821387, 531.5913595714825
};
const double kUSGNPGrowth[] = {
    kNaN, 2.59316421, 2.20217133, 0.45827562,
    0.9687438, -0.24130757, 0.89647478, 2.05393219,
    1.73353648, 0.93871289, -0.46477833, -0.80983406,
    -1.39763689, -0.39886093, 1.1918416, 1.45620048,
    2.11808228, 1.08957863, 1.32390273, 0.87296367,
    -0.19773273, 0.45420215, 0.07221876, 1.1030364,
    0.82097489, -0.05795795, 0.58447772, -1.56192672,
    -2.05041027, 0.53637183, 2.33676839, 2.34014559,
    1.2339263, 1.8869648, -0.45920792, 0.84940469,
    1.70139849, -0.28756312, 0.09594627, -0.86080289,
    1.03447127, 1.23685944, 1.42004502, 2.22410631,
    1.30210173, 1.03517699, 0.9253425, -0.16559951,
    1.3444382, 1.37500131, 1.73222184, 0.71605635,
    2.21032143, 0.85333031, 1.00238776, 0.42725441,
    2.14368343, 1.43789184, 1.57959926, 2.27469826,
    1.95962656, 0.25992399, 1.01946914, 0.49016398,
    0.5636338, 0.5959546, 1.43082857, 0.56230122,
    1.15388393, 1.68722844, 0.77438205, -0.09647045,
    1.39600146, 0.13646798, 0.55223715, -0.39944872,
    -0.61671102, -0.08722561, 1.2101835, -0.90729755,
    2.64916158, -0.0080694, 0.51111895, -0.00401437,
    2.16821432, 1.92586732, 1.03504717, 1.85897219,
    2.32004929, 0.25570789, -0.09855274, 0.89073682,
    -0.55896485, 0.28350255, -1.31155407, -0.88278776,
    -1.97454941, 1.01275265, 1.68264723, 1.38271284,
    1.86073637, 0.4447377, 0.41449001, 0.99202275,
    1.36283576, 1.59970522, 1.98845816, -0.25684232,
    0.87786949, 3.1095655, 0.85324478, 1.23337317,
    0.00314302, -0.09433369, 0.89883322, -0.19036628,
    0.99772376, -2.39120054, 0.06649673, 1.26136017,
    1.91637838, -0.3348029, 0.44207108, -1.40664911,
    -1.52129889, 0.29919869, -0.80197448, 0.15204792,
    0.98585027, 2.13034606, 1.34397924, 1.61550522,
    2.70930099, 1.24461412, 0.50835466, 0.14802167,
    0.939240246972517, 0.8431222368500357, 1.5499913364575235, 0.7560947026535203,
    0.9563067941808612, 0.4009178207507347, 0.9595188450980174, 0.48217939601151727,
    0.5528935739866014, 1.0577916660121645, 0.8635542829132703, 1.696579977682866,
    0.5159352817525331, 1.276151335619602, 0.5149580544561161, 1.3264351168576383,
    0.9344884553845745, 0.7454656791988867, 0.7899659182339036, 0.21804320484175577,
    1.0392526978691308, 0.3966490297244718, -0.0015137345979354677, -0.8799970050372252,
    -0.4856014563534572, 0.672662020935455, 0.4203639797180969, 0.39124422896374966,
    1.0916709746682685, 1.0569355265042546, 1.0265417859880444, 1.0468628590384554,
    0.18361379777385167, 0.6377497246457864, 0.5250241191419036, 1.3119466990481499,
    0.9688253462533325, 1.358569880162186, 0.6420403956367338, 1.104477749296251,
    0.24502400068371344, 0.21473245426548715, 0.836938846235924, 0.6947981234826983,
    0.68267227982588, 1.714011546601668, 0.8660860530211423, 1.085668340554946,
    0.76617204401348, 1.47176177580981, 1.247302253870508, 0.764257404176405,
    0.9402375786226713, 0.8952009121774296, 1.3108366865449028, 1.716157436950816,
    0.8868795717511091, 0.7786660186548389, 1.263644360829197, 1.780192698963745,
    0.2610475349184682, 1.93185856258129, 0.08357335001925037, 0.5900007164653331,
    -0.3302713380032074, 0.6535987703005119, -0.27454160608613165, 0.35257644037436364,
    0.8551982920579349, 0.5292010252050616, 0.4984622513504178, 0.02064215385182422,
    0.4043517814475095, 0.794435538282201, 1.6622298075029462, 0.8954497678535844,
    0.7017360710909415, 0.708219043205105, 0.7318523149864475, 0.8638865661898976,
    0.9928644671413522, 0.4253071337316783, 0.7567538827411013, 0.515464977792135,
    1.3032825454358132, 0.35955893813284234, 0.02664262315530408, 0.7282045058815356,
    0.2998559618191621, 0.7913399166394441, 0.8831847811689997, 0.5251514014275926,
    -0.1822550479431584, 0.36144287915647055, -0.6781361391523077, -1.380482973598518,
    -1.6611979742227945, -0.1851247642470355, 0.6862187581308632
};
const RawDataset kUSGNP{"USGNP", 1951, 1, 235, kUSGNPLevels, kUSGNPGrowth};

const double kUSRGDPLevels[] = {
    2710.349, 2778.801, 2775.488, 2785.204,
    2847.699, 2834.39, 2839.022, 2802.616,
    2819.264, 2872.005, 2918.419, 2977.83,
    3031.241, 3064.709, 3093.047, 3100.563,
    3141.087, 3180.447, 3240.332, 3264.967,
    3338.246, 3376.587, 3422.469, 3431.957,
    3516.251, 3563.96, 3636.285, 3724.014,
    3815.423, 3828.124, 3853.301, 3884.52,
    3918.74, 3919.556, 3950.826, 3980.97,
    4063.013, 4131.998, 4160.267, 4178.293,
    4244.1, 4256.46, 4283.378, 4263.261,
    4256.573, 4264.289, 4302.259, 4256.637,
    4374.016, 4398.829, 4433.943, 4446.264,
    4525.769, 4633.101, 4677.503, 4754.546,
    4876.166, 4932.571, 4906.252, 4953.05,
    4909.617, 4922.188, 4873.52, 4854.34,
    4795.295, 4831.942, 4913.328, 4977.511,
    5090.663, 5128.947, 5154.072, 5191.499,
    5251.762, 5356.131, 5451.921, 5450.793,
    5469.405, 5684.569, 5740.3, 5816.222,
    5825.949, 5831.418, 5873.335, 5889.495,
    5908.467, 5787.373, 5776.617, 5883.46,
    6005.717, 5957.795, 6030.184, 5955.062,
    5857.333, 5889.074, 5866.37, 5871.001,
    5944.02, 6077.619, 6197.468, 6325.574,
    6448.264, 6559.594, 6623.343, 6677.264,
    6740.275, 6797.344, 6903.523, 6955.918,
    7022.757, 7050.969, 7118.95, 7153.359,
    7193.019, 7269.51, 7332.558, 7458.022,
    7496.6, 7592.881, 7632.082, 7733.991,
    7806.603, 7865.016, 7927.393, 7944.697,
    8027.693, 8059.598, 8059.476, 7988.864,
    7950.164, 8003.822, 8037.538, 8069.046,
    8157.616, 8244.294, 8329.361, 8417.016,
    8432.485, 8486.435, 8531.108, 8643.769,
    8727.919, 8847.303, 8904.289, 9003.18,
    9025.267, 9044.668, 9120.684, 9184.275,
    9247.188, 9407.052, 9488.879, 9592.458,
    9666.235, 9809.551, 9932.672, 10008.874,
    10103.425, 10194.277, 10328.787, 10507.575,
    10601.179, 10684.049, 10819.914, 11014.254,
    11043.044, 11258.454, 11267.867, 11334.544,
    11297.171, 11371.251, 11340.075, 11380.128,
    11477.868, 11538.77, 11596.43, 11598.824,
    11645.819, 11738.706, 11935.461, 12042.817,
    12127.623, 12213.818, 12303.533, 12410.282,
    12534.113, 12587.535, 12683.153, 12748.699,
    12915.938, 12962.462, 12965.916, 13060.679,
    13099.901, 13203.977, 13321.109, 13391.249,
    13366.865, 13415.266, 13324.6, 13141.92,
    12925.41, 12901.504, 12990.341
};
const double kUSRGDPGrowth[] = {
    kNaN, 2.49421308163873, -0.11929521106681662, 0.3494532654372051,
    2.219017951429336, -0.4684553282733539, 0.16328801889198274, -1.290635994607836,
    0.5922591255446363, 1.853453415389339, 1.6031639161811384, 2.0152816046898003,
    1.7777259286836156, 1.0980515349976017, 0.9204067213396172, 0.24270187142434452,
    1.298521045351464, 1.2452834593128514, 1.8654040739095379, 0.7573861789328618,
    2.2195863868844867, 1.1419916678280018, 1.349678440620039, 0.2768431976605257,
    2.426471280607778, 1.3476920985249663, 2.009026988071838, 2.38395627245076,
    2.4249417896358594, 0.3323329257922225, 0.655531757692529, 0.8069240525410137,
    0.8770749498840047, 0.020820851954361785, 0.7946288894562059, 0.7600837218946666,
    2.0399308411914063, 1.6836250623496696, 0.6818187675689202, 0.43235350180186316,
    1.5626993226984354, 0.2908045754733024, 0.630412172871786, -0.4707590235586423,
    -0.15699839630070045, 0.18110848665440216, 0.8864772287074274, -1.0660821696957257,
    2.720216833447253, 0.5656788913158906, 0.7950886761737053, 0.2774937094654817,
    1.7723314467893658, 2.3438898862099933, 0.9538014207757683, 1.6336792461098426,
    2.525804234288387, 1.1501097796264403, -0.5350042942591671, 0.9493238255322112,
    -0.8807613756498966, 0.2557212404131093, -0.9936678481238914, -0.3943318438729193,
    -1.2237921312634015, 0.7613228387052473, 1.670305536159411, 1.297845428771538,
    2.247811058416005, 0.7492297472733611, 0.4886706909426053, 0.7235398273953919,
    1.1541159204879747, 1.9678246737301563, 1.7726137552946497, -0.02069209563817509,
    0.3408732702791184, 3.8585475403756675, 0.9756162989988937, 1.3139436292622264,
    0.16709945702260143, 0.09382908509696364, 0.7162420120430113, 0.27476398395105406,
    0.32161514595951957, -2.070793158034334, -0.1860258111918256, 1.8326807009303892,
    2.0566824679381313, -0.8011402724021011, 1.2077078189896895, -1.2535910197692957,
    -1.6547233635337832, 0.540438914742758, -0.3862725768565056, 0.07891034952027809,
    1.2360524736578782, 2.222733528868126, 1.9527814105522623, 2.0459959942552786,
    1.9210165810124025, 1.711776350258809, 0.9671516584397466, 0.8108095427875384,
    0.939240246972517, 0.8431222368500357, 1.5499913364575235, 0.7560947026535203,
    0.9563067941808612, 0.4009178207507347, 0.9595188450980174, 0.48217939601151727,
    0.5528935739866014, 1.0577916660121645, 0.8635542829132703, 1.696579977682866,
    0.5159352817525331, 1.276151335619602, 0.5149580544561161, 1.3264351168576383,
    0.9344884553845745, 0.7454656791988867, 0.7899659182339036, 0.21804320484175577,
    1.0392526978691308, 0.3966490297244718, -0.0015137345979354677, -0.8799970050372252,
    -0.4856014563534572, 0.672662020935455, 0.4203639797180969, 0.39124422896374966,
    1.0916709746682685, 1.0569355265042546, 1.0265417859880444, 1.0468628590384554,
    0.18361379777385167, 0.6377497246457864, 0.5250241191419036, 1.3119466990481499,
    0.9688253462533325, 1.358569880162186, 0.6420403956367338, 1.104477749296251,
    0.24502400068371344, 0.21473245426548715, 0.836938846235924, 0.6947981234826983,
    0.68267227982588, 1.714011546601668, 0.8660860530211423, 1.085668340554946,
    0.76617204401348, 1.47176177580981, 1.247302253870508, 0.764257404176405,
    0.9402375786226713, 0.8952009121774296, 1.3108366865449028, 1.716157436950816,
    0.8868795717511091, 0.7786660186548389, 1.263644360829197, 1.780192698963745,
    0.2610475349184682, 1.93185856258129, 0.08357335001925037, 0.5900007164653331,
    -0.3302713380032074, 0.6535987703005119, -0.27454160608613165, 0.35257644037436364,
    0.8551982920579349, 0.5292010252050616, 0.4984622513504178, 0.02064215385182422,
    0.4043517814475095, 0.794435538282201, 1.6622298075029462, 0.8954497678535844,
    0.7017360710909415, 0.708219043205105, 0.7318523149864475, 0.8638865661898976,
    0.9928644671413522, 0.4253071337316783, 0.7567538827411013, 0.515464977792135,
    1.3032825454358132, 0.35955893813284234, 0.02664262315530408, 0.7282045058815356,
    0.2998559618191621, 0.7913399166394441, 0.8831847811689997, 0.5251514014275926,
    -0.1822550479431584, 0.36144287915647055, -0.6781361391523077, -1.380482973598518,
    -1.6611979742227945, -0.1851247642470355, 0.6862187581308632
};
const RawDataset kUSRGDP{"USRGDP", 1959, 1, 203, kUSRGDPLevels, kUSRGDPGrowth};

const RawDataset* kBundled[] = {&khamilton84GNP, &kchp10GNP, &kUSGNP, &kUSRGDP};
const int kBundledCount = 4;

}  // namespace detail
}  // namespace regimetest
