// Symmetric triangle rules, degrees 1-20, barycentric (l1, l2, l3, weight).
// Weights sum to one; multiply by the triangle area.

pub(super) const DEGREE_1: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 1.0],
];

pub(super) const DEGREE_2: &[[f64; 4]] = &[
    [0.6666666666666666, 0.16666666666666666, 0.16666666666666666, 0.3333333333333333],
    [0.16666666666666666, 0.6666666666666666, 0.16666666666666666, 0.3333333333333333],
    [0.16666666666666666, 0.16666666666666666, 0.6666666666666666, 0.3333333333333333],
];

pub(super) const DEGREE_3: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, -0.5625],
    [0.6, 0.2, 0.2, 0.5208333333333334],
    [0.2, 0.6, 0.2, 0.5208333333333334],
    [0.2, 0.2, 0.6, 0.5208333333333334],
];

pub(super) const DEGREE_4: &[[f64; 4]] = &[
    [0.4459484909159649, 0.4459484909159649, 0.10810301816807022, 0.2233815896780116],
    [0.4459484909159649, 0.10810301816807022, 0.4459484909159649, 0.2233815896780116],
    [0.10810301816807022, 0.4459484909159649, 0.4459484909159649, 0.2233815896780116],
    [0.09157621350977072, 0.09157621350977072, 0.8168475729804585, 0.1099517436553219],
    [0.09157621350977072, 0.8168475729804585, 0.09157621350977072, 0.1099517436553219],
    [0.8168475729804585, 0.09157621350977072, 0.09157621350977072, 0.1099517436553219],
];

pub(super) const DEGREE_5: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.22500000000000006],
    [0.47014206410511505, 0.47014206410511505, 0.05971587178976989, 0.1323941527885062],
    [0.47014206410511505, 0.05971587178976989, 0.47014206410511505, 0.1323941527885062],
    [0.05971587178976989, 0.47014206410511505, 0.47014206410511505, 0.1323941527885062],
    [0.10128650732345632, 0.10128650732345632, 0.7974269853530873, 0.12593918054482717],
    [0.10128650732345632, 0.7974269853530873, 0.10128650732345632, 0.12593918054482717],
    [0.7974269853530873, 0.10128650732345632, 0.10128650732345632, 0.12593918054482717],
];

pub(super) const DEGREE_6: &[[f64; 4]] = &[
    [0.2492867451709104, 0.2492867451709104, 0.5014265096581791, 0.1167862757263794],
    [0.2492867451709104, 0.5014265096581791, 0.2492867451709104, 0.1167862757263794],
    [0.5014265096581791, 0.2492867451709104, 0.2492867451709104, 0.1167862757263794],
    [0.06308901449150227, 0.06308901449150227, 0.8738219710169954, 0.0508449063702069],
    [0.06308901449150227, 0.8738219710169954, 0.06308901449150227, 0.0508449063702069],
    [0.8738219710169954, 0.06308901449150227, 0.06308901449150227, 0.0508449063702069],
    [0.05314504984481697, 0.3103524510337844, 0.6365024991213987, 0.0828510756183736],
    [0.3103524510337844, 0.05314504984481697, 0.6365024991213987, 0.0828510756183736],
    [0.05314504984481697, 0.6365024991213987, 0.3103524510337844, 0.0828510756183736],
    [0.6365024991213987, 0.05314504984481697, 0.3103524510337844, 0.0828510756183736],
    [0.3103524510337844, 0.6365024991213987, 0.05314504984481697, 0.0828510756183736],
    [0.6365024991213987, 0.3103524510337844, 0.05314504984481697, 0.0828510756183736],
];

pub(super) const DEGREE_7: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, -0.14957004446768224],
    [0.26034596607903987, 0.26034596607903987, 0.47930806784192026, 0.17561525743320783],
    [0.26034596607903987, 0.47930806784192026, 0.26034596607903987, 0.17561525743320783],
    [0.47930806784192026, 0.26034596607903987, 0.26034596607903987, 0.17561525743320783],
    [0.06513010290221584, 0.06513010290221584, 0.8697397941955683, 0.053347235608838445],
    [0.06513010290221584, 0.8697397941955683, 0.06513010290221584, 0.053347235608838445],
    [0.8697397941955683, 0.06513010290221584, 0.06513010290221584, 0.053347235608838445],
    [0.04869031542531644, 0.3128654960048739, 0.6384441885698097, 0.07711376089025712],
    [0.3128654960048739, 0.04869031542531644, 0.6384441885698097, 0.07711376089025712],
    [0.04869031542531644, 0.6384441885698097, 0.3128654960048739, 0.07711376089025712],
    [0.6384441885698097, 0.04869031542531644, 0.3128654960048739, 0.07711376089025712],
    [0.3128654960048739, 0.6384441885698097, 0.04869031542531644, 0.07711376089025712],
    [0.6384441885698097, 0.3128654960048739, 0.04869031542531644, 0.07711376089025712],
];

pub(super) const DEGREE_8: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.14431560767778714],
    [0.4592925882927232, 0.4592925882927232, 0.08141482341455364, 0.09509163426728463],
    [0.4592925882927232, 0.08141482341455364, 0.4592925882927232, 0.09509163426728463],
    [0.08141482341455364, 0.4592925882927232, 0.4592925882927232, 0.09509163426728463],
    [0.1705693077517603, 0.1705693077517603, 0.6588613844964795, 0.10321737053471815],
    [0.1705693077517603, 0.6588613844964795, 0.1705693077517603, 0.10321737053471815],
    [0.6588613844964795, 0.1705693077517603, 0.1705693077517603, 0.10321737053471815],
    [0.05054722831703107, 0.05054722831703107, 0.8989055433659379, 0.03245849762319809],
    [0.05054722831703107, 0.8989055433659379, 0.05054722831703107, 0.03245849762319809],
    [0.8989055433659379, 0.05054722831703107, 0.05054722831703107, 0.03245849762319809],
    [0.008394777409957657, 0.2631128296346381, 0.7284923929554042, 0.027230314174435014],
    [0.2631128296346381, 0.008394777409957657, 0.7284923929554042, 0.027230314174435014],
    [0.008394777409957657, 0.7284923929554042, 0.2631128296346381, 0.027230314174435014],
    [0.7284923929554042, 0.008394777409957657, 0.2631128296346381, 0.027230314174435014],
    [0.2631128296346381, 0.7284923929554042, 0.008394777409957657, 0.027230314174435014],
    [0.7284923929554042, 0.2631128296346381, 0.008394777409957657, 0.027230314174435014],
];

pub(super) const DEGREE_9: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.0971357962827987],
    [0.48968251919873756, 0.48968251919873756, 0.02063496160252487, 0.03133470022713923],
    [0.48968251919873756, 0.02063496160252487, 0.48968251919873756, 0.03133470022713923],
    [0.02063496160252487, 0.48968251919873756, 0.48968251919873756, 0.03133470022713923],
    [0.4370895914929365, 0.4370895914929365, 0.12582081701412695, 0.0778275410047742],
    [0.4370895914929365, 0.12582081701412695, 0.4370895914929365, 0.0778275410047742],
    [0.12582081701412695, 0.4370895914929365, 0.4370895914929365, 0.0778275410047742],
    [0.1882035356190327, 0.1882035356190327, 0.6235929287619346, 0.07964773892721022],
    [0.1882035356190327, 0.6235929287619346, 0.1882035356190327, 0.07964773892721022],
    [0.6235929287619346, 0.1882035356190327, 0.1882035356190327, 0.07964773892721022],
    [0.04472951339445273, 0.04472951339445273, 0.9105409732110945, 0.02557767565869805],
    [0.04472951339445273, 0.9105409732110945, 0.04472951339445273, 0.02557767565869805],
    [0.9105409732110945, 0.04472951339445273, 0.04472951339445273, 0.02557767565869805],
    [0.0368384120547363, 0.22196298916076576, 0.741198598784498, 0.04328353937728935],
    [0.22196298916076576, 0.0368384120547363, 0.741198598784498, 0.04328353937728935],
    [0.0368384120547363, 0.741198598784498, 0.22196298916076576, 0.04328353937728935],
    [0.741198598784498, 0.0368384120547363, 0.22196298916076576, 0.04328353937728935],
    [0.22196298916076576, 0.741198598784498, 0.0368384120547363, 0.04328353937728935],
    [0.741198598784498, 0.22196298916076576, 0.0368384120547363, 0.04328353937728935],
];

pub(super) const DEGREE_10: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.09081799038275354],
    [0.48557763338365734, 0.48557763338365734, 0.028844733232685327, 0.03672595775646677],
    [0.48557763338365734, 0.028844733232685327, 0.48557763338365734, 0.03672595775646677],
    [0.028844733232685327, 0.48557763338365734, 0.48557763338365734, 0.03672595775646677],
    [0.10948157548503705, 0.10948157548503705, 0.7810368490299259, 0.04532105943552797],
    [0.10948157548503705, 0.7810368490299259, 0.10948157548503705, 0.04532105943552797],
    [0.7810368490299259, 0.10948157548503705, 0.10948157548503705, 0.04532105943552797],
    [0.14170721941487996, 0.307939838764121, 0.550352941820999, 0.07275791684542013],
    [0.307939838764121, 0.14170721941487996, 0.550352941820999, 0.07275791684542013],
    [0.14170721941487996, 0.550352941820999, 0.307939838764121, 0.07275791684542013],
    [0.550352941820999, 0.14170721941487996, 0.307939838764121, 0.07275791684542013],
    [0.307939838764121, 0.550352941820999, 0.14170721941487996, 0.07275791684542013],
    [0.550352941820999, 0.307939838764121, 0.14170721941487996, 0.07275791684542013],
    [0.02500353476268641, 0.24667256063990267, 0.7283239045974108, 0.028327242531057464],
    [0.24667256063990267, 0.02500353476268641, 0.7283239045974108, 0.028327242531057464],
    [0.02500353476268641, 0.7283239045974108, 0.24667256063990267, 0.028327242531057464],
    [0.7283239045974108, 0.02500353476268641, 0.24667256063990267, 0.028327242531057464],
    [0.24667256063990267, 0.7283239045974108, 0.02500353476268641, 0.028327242531057464],
    [0.7283239045974108, 0.24667256063990267, 0.02500353476268641, 0.028327242531057464],
    [0.009540815400299482, 0.06680325101220033, 0.9236559335875002, 0.009421666963732839],
    [0.06680325101220033, 0.009540815400299482, 0.9236559335875002, 0.009421666963732839],
    [0.009540815400299482, 0.9236559335875002, 0.06680325101220033, 0.009421666963732839],
    [0.9236559335875002, 0.009540815400299482, 0.06680325101220033, 0.009421666963732839],
    [0.06680325101220033, 0.9236559335875002, 0.009540815400299482, 0.009421666963732839],
    [0.9236559335875002, 0.06680325101220033, 0.009540815400299482, 0.009421666963732839],
];

pub(super) const DEGREE_11: &[[f64; 4]] = &[
    [0.5346110482707582, 0.5346110482707582, -0.06922209654151645, 0.0009270063289606852],
    [0.5346110482707582, -0.06922209654151645, 0.5346110482707582, 0.0009270063289606852],
    [-0.06922209654151645, 0.5346110482707582, 0.5346110482707582, 0.0009270063289606852],
    [0.3989693029658552, 0.3989693029658552, 0.2020613940682896, 0.07714953491481315],
    [0.3989693029658552, 0.2020613940682896, 0.3989693029658552, 0.07714953491481315],
    [0.2020613940682896, 0.3989693029658552, 0.3989693029658552, 0.07714953491481315],
    [0.20330990043128244, 0.20330990043128244, 0.5933801991374351, 0.059322977380774085],
    [0.20330990043128244, 0.5933801991374351, 0.20330990043128244, 0.059322977380774085],
    [0.5933801991374351, 0.20330990043128244, 0.20330990043128244, 0.059322977380774085],
    [0.11935091228258127, 0.11935091228258127, 0.7612981754348375, 0.036184540503418045],
    [0.11935091228258127, 0.7612981754348375, 0.11935091228258127, 0.036184540503418045],
    [0.7612981754348375, 0.11935091228258127, 0.11935091228258127, 0.036184540503418045],
    [0.03236494811127587, 0.03236494811127587, 0.9352701037774482, 0.013659731002677873],
    [0.03236494811127587, 0.9352701037774482, 0.03236494811127587, 0.013659731002677873],
    [0.9352701037774482, 0.03236494811127587, 0.03236494811127587, 0.013659731002677873],
    [0.05017813831049466, 0.3566206482612926, 0.5932012134282127, 0.05233711196220407],
    [0.3566206482612926, 0.05017813831049466, 0.5932012134282127, 0.05233711196220407],
    [0.05017813831049466, 0.5932012134282127, 0.3566206482612926, 0.05233711196220407],
    [0.5932012134282127, 0.05017813831049466, 0.3566206482612926, 0.05233711196220407],
    [0.3566206482612926, 0.5932012134282127, 0.05017813831049466, 0.05233711196220407],
    [0.5932012134282127, 0.3566206482612926, 0.05017813831049466, 0.05233711196220407],
    [0.021022016536166317, 0.1714889803040416, 0.8074890031597921, 0.0207076596391407],
    [0.1714889803040416, 0.021022016536166317, 0.8074890031597921, 0.0207076596391407],
    [0.021022016536166317, 0.8074890031597921, 0.1714889803040416, 0.0207076596391407],
    [0.8074890031597921, 0.021022016536166317, 0.1714889803040416, 0.0207076596391407],
    [0.1714889803040416, 0.8074890031597921, 0.021022016536166317, 0.0207076596391407],
    [0.8074890031597921, 0.1714889803040416, 0.021022016536166317, 0.0207076596391407],
];

pub(super) const DEGREE_12: &[[f64; 4]] = &[
    [0.4882173897738049, 0.4882173897738049, 0.02356522045239018, 0.025731066440455377],
    [0.4882173897738049, 0.02356522045239018, 0.4882173897738049, 0.025731066440455377],
    [0.02356522045239018, 0.4882173897738049, 0.4882173897738049, 0.025731066440455377],
    [0.43972439229446025, 0.43972439229446025, 0.1205512154110795, 0.0436925445380385],
    [0.43972439229446025, 0.1205512154110795, 0.43972439229446025, 0.0436925445380385],
    [0.1205512154110795, 0.43972439229446025, 0.43972439229446025, 0.0436925445380385],
    [0.2712103850121159, 0.2712103850121159, 0.45757922997576816, 0.06285822421788524],
    [0.2712103850121159, 0.45757922997576816, 0.2712103850121159, 0.06285822421788524],
    [0.45757922997576816, 0.2712103850121159, 0.2712103850121159, 0.06285822421788524],
    [0.12757614554158575, 0.12757614554158575, 0.7448477089168285, 0.03479611293070886],
    [0.12757614554158575, 0.7448477089168285, 0.12757614554158575, 0.03479611293070886],
    [0.7448477089168285, 0.12757614554158575, 0.12757614554158575, 0.03479611293070886],
    [0.021317350453210406, 0.021317350453210406, 0.9573652990935791, 0.006166261051559027],
    [0.021317350453210406, 0.9573652990935791, 0.021317350453210406, 0.006166261051559027],
    [0.9573652990935791, 0.021317350453210406, 0.021317350453210406, 0.006166261051559027],
    [0.11534349453469803, 0.2757132696855139, 0.608943235779788, 0.040371557766380954],
    [0.2757132696855139, 0.11534349453469803, 0.608943235779788, 0.040371557766380954],
    [0.11534349453469803, 0.608943235779788, 0.2757132696855139, 0.040371557766380954],
    [0.608943235779788, 0.11534349453469803, 0.2757132696855139, 0.040371557766380954],
    [0.2757132696855139, 0.608943235779788, 0.11534349453469803, 0.040371557766380954],
    [0.608943235779788, 0.2757132696855139, 0.11534349453469803, 0.040371557766380954],
    [0.022838332222257056, 0.28132558098993965, 0.6958360867878033, 0.02235677320230342],
    [0.28132558098993965, 0.022838332222257056, 0.6958360867878033, 0.02235677320230342],
    [0.022838332222257056, 0.6958360867878033, 0.28132558098993965, 0.02235677320230342],
    [0.6958360867878033, 0.022838332222257056, 0.28132558098993965, 0.02235677320230342],
    [0.28132558098993965, 0.6958360867878033, 0.022838332222257056, 0.02235677320230342],
    [0.6958360867878033, 0.28132558098993965, 0.022838332222257056, 0.02235677320230342],
    [0.02573405054833023, 0.1162519159075972, 0.8580140335440726, 0.01731623110865889],
    [0.1162519159075972, 0.02573405054833023, 0.8580140335440726, 0.01731623110865889],
    [0.02573405054833023, 0.8580140335440726, 0.1162519159075972, 0.01731623110865889],
    [0.8580140335440726, 0.02573405054833023, 0.1162519159075972, 0.01731623110865889],
    [0.1162519159075972, 0.8580140335440726, 0.02573405054833023, 0.01731623110865889],
    [0.8580140335440726, 0.1162519159075972, 0.02573405054833023, 0.01731623110865889],
];

pub(super) const DEGREE_13: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.052520923329729116],
    [0.49504818494801084, 0.49504818494801084, 0.009903630103978323, 0.011280145203913329],
    [0.49504818494801084, 0.009903630103978323, 0.49504818494801084, 0.011280145203913329],
    [0.009903630103978323, 0.49504818494801084, 0.49504818494801084, 0.011280145203913329],
    [0.46871663508490263, 0.46871663508490263, 0.06256672983019473, 0.031423518409696184],
    [0.46871663508490263, 0.06256672983019473, 0.46871663508490263, 0.031423518409696184],
    [0.06256672983019473, 0.46871663508490263, 0.46871663508490263, 0.031423518409696184],
    [0.41452133675508235, 0.41452133675508235, 0.1709573264898353, 0.04707250247887311],
    [0.41452133675508235, 0.1709573264898353, 0.41452133675508235, 0.04707250247887311],
    [0.1709573264898353, 0.41452133675508235, 0.41452133675508235, 0.04707250247887311],
    [0.22939957209182404, 0.22939957209182404, 0.5412008558163519, 0.04736358648619666],
    [0.22939957209182404, 0.5412008558163519, 0.22939957209182404, 0.04736358648619666],
    [0.5412008558163519, 0.22939957209182404, 0.22939957209182404, 0.04736358648619666],
    [0.11442449516398367, 0.11442449516398367, 0.7711510096720327, 0.03116752903642864],
    [0.11442449516398367, 0.7711510096720327, 0.11442449516398367, 0.03116752903642864],
    [0.7711510096720327, 0.11442449516398367, 0.11442449516398367, 0.03116752903642864],
    [0.02481139136683075, 0.02481139136683075, 0.9503772172663385, 0.007975771467185627],
    [0.02481139136683075, 0.9503772172663385, 0.02481139136683075, 0.007975771467185627],
    [0.9503772172663385, 0.02481139136683075, 0.02481139136683075, 0.007975771467185627],
    [0.09485382848271534, 0.26879499698629705, 0.6363511745309876, 0.036848402739115195],
    [0.26879499698629705, 0.09485382848271534, 0.6363511745309876, 0.036848402739115195],
    [0.09485382848271534, 0.6363511745309876, 0.26879499698629705, 0.036848402739115195],
    [0.6363511745309876, 0.09485382848271534, 0.26879499698629705, 0.036848402739115195],
    [0.26879499698629705, 0.6363511745309876, 0.09485382848271534, 0.036848402739115195],
    [0.6363511745309876, 0.26879499698629705, 0.09485382848271534, 0.036848402739115195],
    [0.018100773312209724, 0.2917300667479149, 0.6901691599398754, 0.01740146333067165],
    [0.2917300667479149, 0.018100773312209724, 0.6901691599398754, 0.01740146333067165],
    [0.018100773312209724, 0.6901691599398754, 0.2917300667479149, 0.01740146333067165],
    [0.6901691599398754, 0.018100773312209724, 0.2917300667479149, 0.01740146333067165],
    [0.2917300667479149, 0.6901691599398754, 0.018100773312209724, 0.01740146333067165],
    [0.6901691599398754, 0.2917300667479149, 0.018100773312209724, 0.01740146333067165],
    [0.022233076663962435, 0.12635738550843173, 0.8514095378276059, 0.015521786834111472],
    [0.12635738550843173, 0.022233076663962435, 0.8514095378276059, 0.015521786834111472],
    [0.022233076663962435, 0.8514095378276059, 0.12635738550843173, 0.015521786834111472],
    [0.8514095378276059, 0.022233076663962435, 0.12635738550843173, 0.015521786834111472],
    [0.12635738550843173, 0.8514095378276059, 0.022233076663962435, 0.015521786834111472],
    [0.8514095378276059, 0.12635738550843173, 0.022233076663962435, 0.015521786834111472],
];

pub(super) const DEGREE_14: &[[f64; 4]] = &[
    [0.48896391036217857, 0.48896391036217857, 0.022072179275642867, 0.0218835813694289],
    [0.48896391036217857, 0.022072179275642867, 0.48896391036217857, 0.0218835813694289],
    [0.022072179275642867, 0.48896391036217857, 0.48896391036217857, 0.0218835813694289],
    [0.417644719340454, 0.417644719340454, 0.164710561319092, 0.032788353544125355],
    [0.417644719340454, 0.164710561319092, 0.417644719340454, 0.032788353544125355],
    [0.164710561319092, 0.417644719340454, 0.417644719340454, 0.032788353544125355],
    [0.27347752830883865, 0.27347752830883865, 0.4530449433823227, 0.051774104507291606],
    [0.27347752830883865, 0.4530449433823227, 0.27347752830883865, 0.051774104507291606],
    [0.4530449433823227, 0.27347752830883865, 0.27347752830883865, 0.051774104507291606],
    [0.17720553241254344, 0.17720553241254344, 0.6455889351749131, 0.042162588736992995],
    [0.17720553241254344, 0.6455889351749131, 0.17720553241254344, 0.042162588736992995],
    [0.6455889351749131, 0.17720553241254344, 0.17720553241254344, 0.042162588736992995],
    [0.06179988309087261, 0.06179988309087261, 0.8764002338182548, 0.014433699669776584],
    [0.06179988309087261, 0.8764002338182548, 0.06179988309087261, 0.014433699669776584],
    [0.8764002338182548, 0.06179988309087261, 0.06179988309087261, 0.014433699669776584],
    [0.019390961248701127, 0.019390961248701127, 0.9612180775025978, 0.004923403602400057],
    [0.019390961248701127, 0.9612180775025978, 0.019390961248701127, 0.004923403602400057],
    [0.9612180775025978, 0.019390961248701127, 0.019390961248701127, 0.004923403602400057],
    [0.05712475740364793, 0.1722666878213555, 0.7706085547749966, 0.024665753212563642],
    [0.1722666878213555, 0.05712475740364793, 0.7706085547749966, 0.024665753212563642],
    [0.05712475740364793, 0.7706085547749966, 0.1722666878213555, 0.024665753212563642],
    [0.7706085547749966, 0.05712475740364793, 0.1722666878213555, 0.024665753212563642],
    [0.1722666878213555, 0.7706085547749966, 0.05712475740364793, 0.024665753212563642],
    [0.7706085547749966, 0.1722666878213555, 0.05712475740364793, 0.024665753212563642],
    [0.09291624935697182, 0.33686145979634485, 0.5702222908466833, 0.03857151078706067],
    [0.33686145979634485, 0.09291624935697182, 0.5702222908466833, 0.03857151078706067],
    [0.09291624935697182, 0.5702222908466833, 0.33686145979634485, 0.03857151078706067],
    [0.5702222908466833, 0.09291624935697182, 0.33686145979634485, 0.03857151078706067],
    [0.33686145979634485, 0.5702222908466833, 0.09291624935697182, 0.03857151078706067],
    [0.5702222908466833, 0.33686145979634485, 0.09291624935697182, 0.03857151078706067],
    [0.014646950055654414, 0.2983728821362578, 0.6869801678080878, 0.014436308113533806],
    [0.2983728821362578, 0.014646950055654414, 0.6869801678080878, 0.014436308113533806],
    [0.014646950055654414, 0.6869801678080878, 0.2983728821362578, 0.014436308113533806],
    [0.6869801678080878, 0.014646950055654414, 0.2983728821362578, 0.014436308113533806],
    [0.2983728821362578, 0.6869801678080878, 0.014646950055654414, 0.014436308113533806],
    [0.6869801678080878, 0.2983728821362578, 0.014646950055654414, 0.014436308113533806],
    [0.0012683309328720147, 0.11897449769695692, 0.8797571713701711, 0.005010228838500666],
    [0.11897449769695692, 0.0012683309328720147, 0.8797571713701711, 0.005010228838500666],
    [0.0012683309328720147, 0.8797571713701711, 0.11897449769695692, 0.005010228838500666],
    [0.8797571713701711, 0.0012683309328720147, 0.11897449769695692, 0.005010228838500666],
    [0.11897449769695692, 0.8797571713701711, 0.0012683309328720147, 0.005010228838500666],
    [0.8797571713701711, 0.11897449769695692, 0.0012683309328720147, 0.005010228838500666],
];

pub(super) const DEGREE_15: &[[f64; 4]] = &[
    [0.5069729168582429, 0.5069729168582429, -0.013945833716485723, 0.0019168756428486605],
    [0.5069729168582429, -0.013945833716485723, 0.5069729168582429, 0.0019168756428486605],
    [-0.013945833716485723, 0.5069729168582429, 0.5069729168582429, 0.0019168756428486605],
    [0.43140635428302254, 0.43140635428302254, 0.13718729143395492, 0.044249027271144895],
    [0.43140635428302254, 0.13718729143395492, 0.43140635428302254, 0.044249027271144895],
    [0.13718729143395492, 0.43140635428302254, 0.43140635428302254, 0.044249027271144895],
    [0.2776936448471444, 0.2776936448471444, 0.44461271030571115, 0.0511865487188522],
    [0.2776936448471444, 0.44461271030571115, 0.2776936448471444, 0.0511865487188522],
    [0.44461271030571115, 0.2776936448471444, 0.2776936448471444, 0.0511865487188522],
    [0.12646489104125375, 0.12646489104125375, 0.7470702179174925, 0.023687735870687912],
    [0.12646489104125375, 0.7470702179174925, 0.12646489104125375, 0.023687735870687912],
    [0.7470702179174925, 0.12646489104125375, 0.12646489104125375, 0.023687735870687912],
    [0.0708083859746857, 0.0708083859746857, 0.8583832280506286, 0.013289775690020537],
    [0.0708083859746857, 0.8583832280506286, 0.0708083859746857, 0.013289775690020537],
    [0.8583832280506286, 0.0708083859746857, 0.0708083859746857, 0.013289775690020537],
    [0.01896517024107336, 0.01896517024107336, 0.9620696595178533, 0.004748916608191822],
    [0.01896517024107336, 0.9620696595178533, 0.01896517024107336, 0.004748916608191822],
    [0.9620696595178533, 0.01896517024107336, 0.01896517024107336, 0.004748916608191822],
    [0.1337341619666211, 0.2613113711400873, 0.6049544668932916, 0.03855007259959249],
    [0.2613113711400873, 0.1337341619666211, 0.6049544668932916, 0.03855007259959249],
    [0.1337341619666211, 0.6049544668932916, 0.2613113711400873, 0.03855007259959249],
    [0.6049544668932916, 0.1337341619666211, 0.2613113711400873, 0.03855007259959249],
    [0.2613113711400873, 0.6049544668932916, 0.1337341619666211, 0.03855007259959249],
    [0.6049544668932916, 0.2613113711400873, 0.1337341619666211, 0.03855007259959249],
    [0.03636667739691685, 0.5755865555128141, 0.388046767090269, 0.02721581432062431],
    [0.5755865555128141, 0.03636667739691685, 0.388046767090269, 0.02721581432062431],
    [0.03636667739691685, 0.388046767090269, 0.5755865555128141, 0.02721581432062431],
    [0.388046767090269, 0.03636667739691685, 0.5755865555128141, 0.02721581432062431],
    [0.5755865555128141, 0.388046767090269, 0.03636667739691685, 0.02721581432062431],
    [0.388046767090269, 0.5755865555128141, 0.03636667739691685, 0.02721581432062431],
    [-0.010174883126570586, 0.2857122200499159, 0.7244626630766547, 0.0021820773667970694],
    [0.2857122200499159, -0.010174883126570586, 0.7244626630766547, 0.0021820773667970694],
    [-0.010174883126570586, 0.7244626630766547, 0.2857122200499159, 0.0021820773667970694],
    [0.7244626630766547, -0.010174883126570586, 0.2857122200499159, 0.0021820773667970694],
    [0.2857122200499159, 0.7244626630766547, -0.010174883126570586, 0.0021820773667970694],
    [0.7244626630766547, 0.2857122200499159, -0.010174883126570586, 0.0021820773667970694],
    [0.036843869875878274, 0.21559966407228406, 0.7475564660518377, 0.021505319847731345],
    [0.21559966407228406, 0.036843869875878274, 0.7475564660518377, 0.021505319847731345],
    [0.036843869875878274, 0.7475564660518377, 0.21559966407228406, 0.021505319847731345],
    [0.7475564660518377, 0.036843869875878274, 0.21559966407228406, 0.021505319847731345],
    [0.21559966407228406, 0.7475564660518377, 0.036843869875878274, 0.021505319847731345],
    [0.7475564660518377, 0.21559966407228406, 0.036843869875878274, 0.021505319847731345],
    [0.012459809331198717, 0.10357561657638606, 0.8839645740924152, 0.007673942631048677],
    [0.10357561657638606, 0.012459809331198717, 0.8839645740924152, 0.007673942631048677],
    [0.012459809331198717, 0.8839645740924152, 0.10357561657638606, 0.007673942631048677],
    [0.8839645740924152, 0.012459809331198717, 0.10357561657638606, 0.007673942631048677],
    [0.10357561657638606, 0.8839645740924152, 0.012459809331198717, 0.007673942631048677],
    [0.8839645740924152, 0.10357561657638606, 0.012459809331198717, 0.007673942631048677],
];

pub(super) const DEGREE_16: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.04687569742764158],
    [0.4973805419484384, 0.4973805419484384, 0.0052389161031232145, 0.006405878578584993],
    [0.4973805419484384, 0.0052389161031232145, 0.4973805419484384, 0.006405878578584993],
    [0.0052389161031232145, 0.4973805419484384, 0.4973805419484384, 0.006405878578584993],
    [0.41346943854935236, 0.41346943854935236, 0.17306112290129527, 0.04171029673938679],
    [0.41346943854935236, 0.17306112290129527, 0.41346943854935236, 0.04171029673938679],
    [0.17306112290129527, 0.41346943854935236, 0.41346943854935236, 0.04171029673938679],
    [0.4704585990669913, 0.4704585990669913, 0.05908280186601744, 0.026891484250064497],
    [0.4704585990669913, 0.05908280186601744, 0.4704585990669913, 0.026891484250064497],
    [0.05908280186601744, 0.4704585990669913, 0.4704585990669913, 0.026891484250064497],
    [0.2405537499695209, 0.2405537499695209, 0.5188925000609582, 0.0421325227616496],
    [0.2405537499695209, 0.5188925000609582, 0.2405537499695209, 0.0421325227616496],
    [0.5188925000609582, 0.2405537499695209, 0.2405537499695209, 0.0421325227616496],
    [0.14796579422257275, 0.14796579422257275, 0.7040684115548546, 0.03000026684277298],
    [0.14796579422257275, 0.7040684115548546, 0.14796579422257275, 0.03000026684277298],
    [0.7040684115548546, 0.14796579422257275, 0.14796579422257275, 0.03000026684277298],
    [0.07546518765747415, 0.07546518765747415, 0.8490696246850518, 0.01420009892502417],
    [0.07546518765747415, 0.8490696246850518, 0.07546518765747415, 0.01420009892502417],
    [0.8490696246850518, 0.07546518765747415, 0.07546518765747415, 0.01420009892502417],
    [0.016596402623025232, 0.016596402623025232, 0.9668071947539495, 0.003582462351273369],
    [0.016596402623025232, 0.9668071947539495, 0.016596402623025232, 0.003582462351273369],
    [0.9668071947539495, 0.016596402623025232, 0.016596402623025232, 0.003582462351273369],
    [0.10357569224525195, 0.29655559657988734, 0.5998687111748606, 0.03277314746062747],
    [0.29655559657988734, 0.10357569224525195, 0.5998687111748606, 0.03277314746062747],
    [0.10357569224525195, 0.5998687111748606, 0.29655559657988734, 0.03277314746062747],
    [0.5998687111748606, 0.10357569224525195, 0.29655559657988734, 0.03277314746062747],
    [0.29655559657988734, 0.5998687111748606, 0.10357569224525195, 0.03277314746062747],
    [0.5998687111748606, 0.29655559657988734, 0.10357569224525195, 0.03277314746062747],
    [0.020083411655415946, 0.33772306340307945, 0.6421935249415046, 0.015298306248441218],
    [0.33772306340307945, 0.020083411655415946, 0.6421935249415046, 0.015298306248441218],
    [0.020083411655415946, 0.6421935249415046, 0.33772306340307945, 0.015298306248441218],
    [0.6421935249415046, 0.020083411655415946, 0.33772306340307945, 0.015298306248441218],
    [0.33772306340307945, 0.6421935249415046, 0.020083411655415946, 0.015298306248441218],
    [0.6421935249415046, 0.33772306340307945, 0.020083411655415946, 0.015298306248441218],
    [-0.0043410026141389845, 0.2047482816428124, 0.7995927209713267, 0.0023862441928386192],
    [0.2047482816428124, -0.0043410026141389845, 0.7995927209713267, 0.0023862441928386192],
    [-0.0043410026141389845, 0.7995927209713267, 0.2047482816428124, 0.0023862441928386192],
    [0.7995927209713267, -0.0043410026141389845, 0.2047482816428124, 0.0023862441928386192],
    [0.2047482816428124, 0.7995927209713267, -0.0043410026141389845, 0.0023862441928386192],
    [0.7995927209713267, 0.2047482816428124, -0.0043410026141389845, 0.0023862441928386192],
    [0.04194178646800986, 0.18935849213062284, 0.7686997214013673, 0.019084792755898895],
    [0.18935849213062284, 0.04194178646800986, 0.7686997214013673, 0.019084792755898895],
    [0.04194178646800986, 0.7686997214013673, 0.18935849213062284, 0.019084792755898895],
    [0.7686997214013673, 0.04194178646800986, 0.18935849213062284, 0.019084792755898895],
    [0.18935849213062284, 0.7686997214013673, 0.04194178646800986, 0.019084792755898895],
    [0.7686997214013673, 0.18935849213062284, 0.04194178646800986, 0.019084792755898895],
    [0.014317320230681212, 0.0852836156826576, 0.9003990640866611, 0.006850054546541954],
    [0.0852836156826576, 0.014317320230681212, 0.9003990640866611, 0.006850054546541954],
    [0.014317320230681212, 0.9003990640866611, 0.0852836156826576, 0.006850054546541954],
    [0.9003990640866611, 0.014317320230681212, 0.0852836156826576, 0.006850054546541954],
    [0.0852836156826576, 0.9003990640866611, 0.014317320230681212, 0.006850054546541954],
    [0.9003990640866611, 0.0852836156826576, 0.014317320230681212, 0.006850054546541954],
];

pub(super) const DEGREE_17: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.033437199290840214],
    [0.4971705405567861, 0.4971705405567861, 0.005658918886427777, 0.005093415440488067],
    [0.4971705405567861, 0.005658918886427777, 0.4971705405567861, 0.005093415440488067],
    [0.005658918886427777, 0.4971705405567861, 0.4971705405567861, 0.005093415440488067],
    [0.4821763226246708, 0.4821763226246708, 0.03564735475065839, 0.014670864527619351],
    [0.4821763226246708, 0.03564735475065839, 0.4821763226246708, 0.014670864527619351],
    [0.03564735475065839, 0.4821763226246708, 0.4821763226246708, 0.014670864527619351],
    [0.45023996902084706, 0.45023996902084706, 0.09952006195830587, 0.024350878353673618],
    [0.45023996902084706, 0.09952006195830587, 0.45023996902084706, 0.024350878353673618],
    [0.09952006195830587, 0.45023996902084706, 0.45023996902084706, 0.024350878353673618],
    [0.4002662393774414, 0.4002662393774414, 0.19946752124511724, 0.031107550868995],
    [0.4002662393774414, 0.19946752124511724, 0.4002662393774414, 0.031107550868995],
    [0.19946752124511724, 0.4002662393774414, 0.4002662393774414, 0.031107550868995],
    [0.2521412679709325, 0.2521412679709325, 0.495717464058135, 0.031257111218644065],
    [0.2521412679709325, 0.495717464058135, 0.2521412679709325, 0.031257111218644065],
    [0.495717464058135, 0.2521412679709325, 0.2521412679709325, 0.031257111218644065],
    [0.16204700465847163, 0.16204700465847163, 0.6759059906830567, 0.024815654339666093],
    [0.16204700465847163, 0.6759059906830567, 0.16204700465847163, 0.024815654339666093],
    [0.6759059906830567, 0.16204700465847163, 0.16204700465847163, 0.024815654339666093],
    [0.0758758822607461, 0.0758758822607461, 0.8482482354785078, 0.014056073070556993],
    [0.0758758822607461, 0.8482482354785078, 0.0758758822607461, 0.014056073070556993],
    [0.8482482354785078, 0.0758758822607461, 0.0758758822607461, 0.014056073070556993],
    [0.0156547269678222, 0.0156547269678222, 0.9686905460643556, 0.003194676173778768],
    [0.0156547269678222, 0.9686905460643556, 0.0156547269678222, 0.003194676173778768],
    [0.9686905460643556, 0.0156547269678222, 0.0156547269678222, 0.003194676173778768],
    [0.33431986736366526, 0.6554932038094359, 0.010186928826898867, 0.008119655318978545],
    [0.6554932038094359, 0.33431986736366526, 0.010186928826898867, 0.008119655318978545],
    [0.33431986736366526, 0.010186928826898867, 0.6554932038094359, 0.008119655318978545],
    [0.010186928826898867, 0.33431986736366526, 0.6554932038094359, 0.008119655318978545],
    [0.6554932038094359, 0.010186928826898867, 0.33431986736366526, 0.008119655318978545],
    [0.010186928826898867, 0.6554932038094359, 0.33431986736366526, 0.008119655318978545],
    [0.29222153779698057, 0.5723375905320564, 0.13544087167096308, 0.026805742283169325],
    [0.5723375905320564, 0.29222153779698057, 0.13544087167096308, 0.026805742283169325],
    [0.29222153779698057, 0.13544087167096308, 0.5723375905320564, 0.026805742283169325],
    [0.13544087167096308, 0.29222153779698057, 0.5723375905320564, 0.026805742283169325],
    [0.5723375905320564, 0.13544087167096308, 0.29222153779698057, 0.026805742283169325],
    [0.13544087167096308, 0.5723375905320564, 0.29222153779698057, 0.026805742283169325],
    [0.31957488542320855, 0.6260011902862752, 0.054423924290516235, 0.018459993210813742],
    [0.6260011902862752, 0.31957488542320855, 0.054423924290516235, 0.018459993210813742],
    [0.31957488542320855, 0.054423924290516235, 0.6260011902862752, 0.018459993210813742],
    [0.054423924290516235, 0.31957488542320855, 0.6260011902862752, 0.018459993210813742],
    [0.6260011902862752, 0.054423924290516235, 0.31957488542320855, 0.018459993210813742],
    [0.054423924290516235, 0.6260011902862752, 0.31957488542320855, 0.018459993210813742],
    [0.1907042241922908, 0.7964272149740711, 0.012868560833638076, 0.008476868534329295],
    [0.7964272149740711, 0.1907042241922908, 0.012868560833638076, 0.008476868534329295],
    [0.1907042241922908, 0.012868560833638076, 0.7964272149740711, 0.008476868534329295],
    [0.012868560833638076, 0.1907042241922908, 0.7964272149740711, 0.008476868534329295],
    [0.7964272149740711, 0.012868560833638076, 0.1907042241922908, 0.008476868534329295],
    [0.012868560833638076, 0.7964272149740711, 0.1907042241922908, 0.008476868534329295],
    [0.18048321164874404, 0.7523510059377247, 0.06716578241353122, 0.018292796770026022],
    [0.7523510059377247, 0.18048321164874404, 0.06716578241353122, 0.018292796770026022],
    [0.18048321164874404, 0.06716578241353122, 0.7523510059377247, 0.018292796770026022],
    [0.06716578241353122, 0.18048321164874404, 0.7523510059377247, 0.018292796770026022],
    [0.7523510059377247, 0.06716578241353122, 0.18048321164874404, 0.018292796770026022],
    [0.06716578241353122, 0.7523510059377247, 0.18048321164874404, 0.018292796770026022],
    [0.08071131367956343, 0.9046255040956082, 0.01466318222482843, 0.006665632004165368],
    [0.9046255040956082, 0.08071131367956343, 0.01466318222482843, 0.006665632004165368],
    [0.08071131367956343, 0.01466318222482843, 0.9046255040956082, 0.006665632004165368],
    [0.01466318222482843, 0.08071131367956343, 0.9046255040956082, 0.006665632004165368],
    [0.9046255040956082, 0.01466318222482843, 0.08071131367956343, 0.006665632004165368],
    [0.01466318222482843, 0.9046255040956082, 0.08071131367956343, 0.006665632004165368],
];

pub(super) const DEGREE_18: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.03080993993764914],
    [0.4933448086309214, 0.4933448086309214, 0.013310382738157212, 0.009072436679404097],
    [0.4933448086309214, 0.013310382738157212, 0.4933448086309214, 0.009072436679404097],
    [0.013310382738157212, 0.4933448086309214, 0.4933448086309214, 0.009072436679404097],
    [0.46921059424195777, 0.46921059424195777, 0.061578811516084464, 0.018761316939592633],
    [0.46921059424195777, 0.061578811516084464, 0.46921059424195777, 0.018761316939592633],
    [0.061578811516084464, 0.46921059424195777, 0.46921059424195777, 0.018761316939592633],
    [0.4362813958870089, 0.4362813958870089, 0.12743720822598215, 0.0194410979854766],
    [0.4362813958870089, 0.12743720822598215, 0.4362813958870089, 0.0194410979854766],
    [0.12743720822598215, 0.4362813958870089, 0.4362813958870089, 0.0194410979854766],
    [0.39484617067341843, 0.39484617067341843, 0.21030765865316314, 0.027753948610811156],
    [0.39484617067341843, 0.21030765865316314, 0.39484617067341843, 0.027753948610811156],
    [0.21030765865316314, 0.39484617067341843, 0.39484617067341843, 0.027753948610811156],
    [0.24979456880315679, 0.24979456880315679, 0.5004108623936865, 0.032256225351457606],
    [0.24979456880315679, 0.5004108623936865, 0.24979456880315679, 0.032256225351457606],
    [0.5004108623936865, 0.24979456880315679, 0.24979456880315679, 0.032256225351457606],
    [0.16143219374384238, 0.16143219374384238, 0.6771356125123152, 0.025074032616922145],
    [0.16143219374384238, 0.6771356125123152, 0.16143219374384238, 0.025074032616922145],
    [0.6771356125123152, 0.16143219374384238, 0.16143219374384238, 0.025074032616922145],
    [0.07659822748537065, 0.07659822748537065, 0.8468035450292587, 0.015271927971832711],
    [0.07659822748537065, 0.8468035450292587, 0.07659822748537065, 0.015271927971832711],
    [0.8468035450292587, 0.07659822748537065, 0.07659822748537065, 0.015271927971832711],
    [0.024252439353448743, 0.024252439353448743, 0.9514951212931025, 0.00679392202296132],
    [0.024252439353448743, 0.9514951212931025, 0.024252439353448743, 0.00679392202296132],
    [0.9514951212931025, 0.024252439353448743, 0.024252439353448743, 0.00679392202296132],
    [0.04314636721698428, 0.04314636721698428, 0.9137072655660314, -0.0022230987299196835],
    [0.04314636721698428, 0.9137072655660314, 0.04314636721698428, -0.0022230987299196835],
    [0.9137072655660314, 0.04314636721698428, 0.04314636721698428, -0.0022230987299196835],
    [0.358911494940945, 0.6326579688566352, 0.008430536202419847, 0.0063319140764057135],
    [0.6326579688566352, 0.358911494940945, 0.008430536202419847, 0.0063319140764057135],
    [0.358911494940945, 0.008430536202419847, 0.6326579688566352, 0.0063319140764057135],
    [0.008430536202419847, 0.358911494940945, 0.6326579688566352, 0.0063319140764057135],
    [0.6326579688566352, 0.008430536202419847, 0.358911494940945, 0.0063319140764057135],
    [0.008430536202419847, 0.6326579688566352, 0.358911494940945, 0.0063319140764057135],
    [0.29440247675195685, 0.5744109715108556, 0.13118655173718752, 0.027257538049138493],
    [0.5744109715108556, 0.29440247675195685, 0.13118655173718752, 0.027257538049138493],
    [0.29440247675195685, 0.13118655173718752, 0.5744109715108556, 0.027257538049138493],
    [0.13118655173718752, 0.29440247675195685, 0.5744109715108556, 0.027257538049138493],
    [0.5744109715108556, 0.13118655173718752, 0.29440247675195685, 0.027257538049138493],
    [0.13118655173718752, 0.5744109715108556, 0.29440247675195685, 0.027257538049138493],
    [0.3250178016418146, 0.6247790467925116, 0.05020315156567379, 0.017676785649464646],
    [0.6247790467925116, 0.3250178016418146, 0.05020315156567379, 0.017676785649464646],
    [0.3250178016418146, 0.05020315156567379, 0.6247790467925116, 0.017676785649464646],
    [0.05020315156567379, 0.3250178016418146, 0.6247790467925116, 0.017676785649464646],
    [0.6247790467925116, 0.05020315156567379, 0.3250178016418146, 0.017676785649464646],
    [0.05020315156567379, 0.6247790467925116, 0.3250178016418146, 0.017676785649464646],
    [0.18473755966604682, 0.748933176523037, 0.0663292638109162, 0.01837948463807007],
    [0.748933176523037, 0.18473755966604682, 0.0663292638109162, 0.01837948463807007],
    [0.18473755966604682, 0.0663292638109162, 0.748933176523037, 0.01837948463807007],
    [0.0663292638109162, 0.18473755966604682, 0.748933176523037, 0.01837948463807007],
    [0.748933176523037, 0.0663292638109162, 0.18473755966604682, 0.01837948463807007],
    [0.0663292638109162, 0.748933176523037, 0.18473755966604682, 0.01837948463807007],
    [0.21879680001332186, 0.7692070054204425, 0.011996194566235685, 0.008104732808191854],
    [0.7692070054204425, 0.21879680001332186, 0.011996194566235685, 0.008104732808191854],
    [0.21879680001332186, 0.011996194566235685, 0.7692070054204425, 0.008104732808191854],
    [0.011996194566235685, 0.21879680001332186, 0.7692070054204425, 0.008104732808191854],
    [0.7692070054204425, 0.011996194566235685, 0.21879680001332186, 0.008104732808191854],
    [0.011996194566235685, 0.7692070054204425, 0.21879680001332186, 0.008104732808191854],
    [0.10117959713640859, 0.8839623022734658, 0.0148581005901256, 0.0076341290707245485],
    [0.8839623022734658, 0.10117959713640859, 0.0148581005901256, 0.0076341290707245485],
    [0.10117959713640859, 0.0148581005901256, 0.8839623022734658, 0.0076341290707245485],
    [0.0148581005901256, 0.10117959713640859, 0.8839623022734658, 0.0076341290707245485],
    [0.8839623022734658, 0.0148581005901256, 0.10117959713640859, 0.0076341290707245485],
    [0.0148581005901256, 0.8839623022734658, 0.10117959713640859, 0.0076341290707245485],
    [0.02087475528258716, 1.014347260005358, -0.03522201528794522, 4.618766079411686e-05],
    [1.014347260005358, 0.02087475528258716, -0.03522201528794522, 4.618766079411686e-05],
    [0.02087475528258716, -0.03522201528794522, 1.014347260005358, 4.618766079411686e-05],
    [-0.03522201528794522, 0.02087475528258716, 1.014347260005358, 4.618766079411686e-05],
    [1.014347260005358, -0.03522201528794522, 0.02087475528258716, 4.618766079411686e-05],
    [-0.03522201528794522, 1.014347260005358, 0.02087475528258716, 4.618766079411686e-05],
];

pub(super) const DEGREE_19: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.032906331388918145],
    [0.48960998707300485, 0.48960998707300485, 0.020780025853990303, 0.010330731891272114],
    [0.48960998707300485, 0.020780025853990303, 0.48960998707300485, 0.010330731891272114],
    [0.020780025853990303, 0.48960998707300485, 0.48960998707300485, 0.010330731891272114],
    [0.4545368926978903, 0.4545368926978903, 0.09092621460421935, 0.022387247263016344],
    [0.4545368926978903, 0.09092621460421935, 0.4545368926978903, 0.022387247263016344],
    [0.09092621460421935, 0.4545368926978903, 0.4545368926978903, 0.022387247263016344],
    [0.40141668064942987, 0.40141668064942987, 0.19716663870114026, 0.03026612586946764],
    [0.40141668064942987, 0.19716663870114026, 0.40141668064942987, 0.03026612586946764],
    [0.19716663870114026, 0.40141668064942987, 0.40141668064942987, 0.03026612586946764],
    [0.25555165440309735, 0.25555165440309735, 0.4888966911938053, 0.030490967802197348],
    [0.25555165440309735, 0.4888966911938053, 0.25555165440309735, 0.030490967802197348],
    [0.4888966911938053, 0.25555165440309735, 0.25555165440309735, 0.030490967802197348],
    [0.1770779421521279, 0.1770779421521279, 0.6458441156957442, 0.024159212741640682],
    [0.1770779421521279, 0.6458441156957442, 0.1770779421521279, 0.024159212741640682],
    [0.6458441156957442, 0.1770779421521279, 0.1770779421521279, 0.024159212741640682],
    [0.11006105322795084, 0.11006105322795084, 0.7798778935440983, 0.01605080358680087],
    [0.11006105322795084, 0.7798778935440983, 0.11006105322795084, 0.01605080358680087],
    [0.7798778935440983, 0.11006105322795084, 0.11006105322795084, 0.01605080358680087],
    [0.05552862425183902, 0.05552862425183902, 0.888942751496322, 0.008084580261784113],
    [0.05552862425183902, 0.888942751496322, 0.05552862425183902, 0.008084580261784113],
    [0.888942751496322, 0.05552862425183902, 0.05552862425183902, 0.008084580261784113],
    [0.012621863777228966, 0.012621863777228966, 0.9747562724455421, 0.002079362027484865],
    [0.012621863777228966, 0.9747562724455421, 0.012621863777228966, 0.002079362027484865],
    [0.9747562724455421, 0.012621863777228966, 0.012621863777228966, 0.002079362027484865],
    [0.3957547873569518, 0.6006337947946352, 0.003611417848413012, 0.003884876904981812],
    [0.6006337947946352, 0.3957547873569518, 0.003611417848413012, 0.003884876904981812],
    [0.3957547873569518, 0.003611417848413012, 0.6006337947946352, 0.003884876904981812],
    [0.003611417848413012, 0.3957547873569518, 0.6006337947946352, 0.003884876904981812],
    [0.6006337947946352, 0.003611417848413012, 0.3957547873569518, 0.003884876904981812],
    [0.003611417848413012, 0.6006337947946352, 0.3957547873569518, 0.003884876904981812],
    [0.3079299838804336, 0.5576032615887845, 0.13446675453078194, 0.025574160612021626],
    [0.5576032615887845, 0.3079299838804336, 0.13446675453078194, 0.025574160612021626],
    [0.3079299838804336, 0.13446675453078194, 0.5576032615887845, 0.025574160612021626],
    [0.13446675453078194, 0.3079299838804336, 0.5576032615887845, 0.025574160612021626],
    [0.5576032615887845, 0.13446675453078194, 0.3079299838804336, 0.025574160612021626],
    [0.13446675453078194, 0.5576032615887845, 0.3079299838804336, 0.025574160612021626],
    [0.26456694840652617, 0.720987025817359, 0.014446025776114868, 0.008880903573338286],
    [0.720987025817359, 0.26456694840652617, 0.014446025776114868, 0.008880903573338286],
    [0.26456694840652617, 0.014446025776114868, 0.720987025817359, 0.008880903573338286],
    [0.014446025776114868, 0.26456694840652617, 0.720987025817359, 0.008880903573338286],
    [0.720987025817359, 0.014446025776114868, 0.26456694840652617, 0.008880903573338286],
    [0.014446025776114868, 0.720987025817359, 0.26456694840652617, 0.008880903573338286],
    [0.3585393522059518, 0.594527068955867, 0.04693357883818117, 0.016124546761731515],
    [0.594527068955867, 0.3585393522059518, 0.04693357883818117, 0.016124546761731515],
    [0.3585393522059518, 0.04693357883818117, 0.594527068955867, 0.016124546761731515],
    [0.04693357883818117, 0.3585393522059518, 0.594527068955867, 0.016124546761731515],
    [0.594527068955867, 0.04693357883818117, 0.3585393522059518, 0.016124546761731515],
    [0.04693357883818117, 0.594527068955867, 0.3585393522059518, 0.016124546761731515],
    [0.15780740596860005, 0.839331473680833, 0.002861120350566848, 0.0024919418174907636],
    [0.839331473680833, 0.15780740596860005, 0.002861120350566848, 0.0024919418174907636],
    [0.15780740596860005, 0.002861120350566848, 0.839331473680833, 0.0024919418174907636],
    [0.002861120350566848, 0.15780740596860005, 0.839331473680833, 0.0024919418174907636],
    [0.839331473680833, 0.002861120350566848, 0.15780740596860005, 0.0024919418174907636],
    [0.002861120350566848, 0.839331473680833, 0.15780740596860005, 0.0024919418174907636],
    [0.07505059697591038, 0.7010879789261739, 0.22386142409791576, 0.018242840118950523],
    [0.7010879789261739, 0.07505059697591038, 0.22386142409791576, 0.018242840118950523],
    [0.07505059697591038, 0.22386142409791576, 0.7010879789261739, 0.018242840118950523],
    [0.22386142409791576, 0.07505059697591038, 0.7010879789261739, 0.018242840118950523],
    [0.7010879789261739, 0.22386142409791576, 0.07505059697591038, 0.018242840118950523],
    [0.22386142409791576, 0.7010879789261739, 0.07505059697591038, 0.018242840118950523],
    [0.14242160111338437, 0.8229313240698561, 0.03464707481675955, 0.010258563736198557],
    [0.8229313240698561, 0.14242160111338437, 0.03464707481675955, 0.010258563736198557],
    [0.14242160111338437, 0.03464707481675955, 0.8229313240698561, 0.010258563736198557],
    [0.03464707481675955, 0.14242160111338437, 0.8229313240698561, 0.010258563736198557],
    [0.8229313240698561, 0.03464707481675955, 0.14242160111338437, 0.010258563736198557],
    [0.03464707481675955, 0.8229313240698561, 0.14242160111338437, 0.010258563736198557],
    [0.06549462808293982, 0.9243442526207822, 0.010161119296277943, 0.0037999288553019085],
    [0.9243442526207822, 0.06549462808293982, 0.010161119296277943, 0.0037999288553019085],
    [0.06549462808293982, 0.010161119296277943, 0.9243442526207822, 0.0037999288553019085],
    [0.010161119296277943, 0.06549462808293982, 0.9243442526207822, 0.0037999288553019085],
    [0.9243442526207822, 0.010161119296277943, 0.06549462808293982, 0.0037999288553019085],
    [0.010161119296277943, 0.9243442526207822, 0.06549462808293982, 0.0037999288553019085],
];

pub(super) const DEGREE_20: &[[f64; 4]] = &[
    [0.3333333333333333, 0.3333333333333333, 0.3333333333333333, 0.03305705554162409],
    [0.5009504643521954, 0.5009504643521954, -0.0019009287043907364, 0.0008670191856636963],
    [0.5009504643521954, -0.0019009287043907364, 0.5009504643521954, 0.0008670191856636963],
    [-0.0019009287043907364, 0.5009504643521954, 0.5009504643521954, 0.0008670191856636963],
    [0.4882129579347271, 0.4882129579347271, 0.023574084130545847, 0.011660052716447027],
    [0.4882129579347271, 0.023574084130545847, 0.4882129579347271, 0.011660052716447027],
    [0.023574084130545847, 0.4882129579347271, 0.4882129579347271, 0.011660052716447027],
    [0.4551366819502818, 0.4551366819502818, 0.08972663609943643, 0.022876936356420716],
    [0.4551366819502818, 0.08972663609943643, 0.4551366819502818, 0.022876936356420716],
    [0.08972663609943643, 0.4551366819502818, 0.4551366819502818, 0.022876936356420716],
    [0.401996259318289, 0.401996259318289, 0.19600748136342205, 0.03044898267393788],
    [0.401996259318289, 0.19600748136342205, 0.401996259318289, 0.03044898267393788],
    [0.19600748136342205, 0.401996259318289, 0.401996259318289, 0.03044898267393788],
    [0.25589290975942114, 0.25589290975942114, 0.4882141804811577, 0.03062489172535462],
    [0.25589290975942114, 0.4882141804811577, 0.25589290975942114, 0.03062489172535462],
    [0.4882141804811577, 0.25589290975942114, 0.25589290975942114, 0.03062489172535462],
    [0.17648825599510604, 0.17648825599510604, 0.6470234880097879, 0.024368057676800465],
    [0.17648825599510604, 0.6470234880097879, 0.17648825599510604, 0.024368057676800465],
    [0.6470234880097879, 0.17648825599510604, 0.17648825599510604, 0.024368057676800465],
    [0.10417085533675824, 0.10417085533675824, 0.7916582893264835, 0.01599743203202392],
    [0.10417085533675824, 0.7916582893264835, 0.10417085533675824, 0.01599743203202392],
    [0.7916582893264835, 0.10417085533675824, 0.10417085533675824, 0.01599743203202392],
    [0.053068963840928046, 0.053068963840928046, 0.8938620723181439, 0.007698301815604219],
    [0.053068963840928046, 0.8938620723181439, 0.053068963840928046, 0.007698301815604219],
    [0.8938620723181439, 0.053068963840928046, 0.053068963840928046, 0.007698301815604219],
    [0.04161871519604597, 0.04161871519604597, 0.916762569607908, -0.000632060497489509],
    [0.04161871519604597, 0.916762569607908, 0.04161871519604597, -0.000632060497489509],
    [0.916762569607908, 0.04161871519604597, 0.04161871519604597, -0.000632060497489509],
    [0.011581921406821852, 0.011581921406821852, 0.9768361571863563, 0.0017511343011927351],
    [0.011581921406821852, 0.9768361571863563, 0.011581921406821852, 0.0017511343011927351],
    [0.9768361571863563, 0.011581921406821852, 0.011581921406821852, 0.0017511343011927351],
    [0.34485577022900116, 0.6064026461061596, 0.04874158366483927, 0.016465839189575806],
    [0.6064026461061596, 0.34485577022900116, 0.04874158366483927, 0.016465839189575806],
    [0.34485577022900116, 0.04874158366483927, 0.6064026461061596, 0.016465839189575806],
    [0.04874158366483927, 0.34485577022900116, 0.6064026461061596, 0.016465839189575806],
    [0.6064026461061596, 0.04874158366483927, 0.34485577022900116, 0.016465839189575806],
    [0.04874158366483927, 0.6064026461061596, 0.34485577022900116, 0.016465839189575806],
    [0.3778432695948536, 0.6158426144565412, 0.006314115948605203, 0.00483903354048481],
    [0.6158426144565412, 0.3778432695948536, 0.006314115948605203, 0.00483903354048481],
    [0.3778432695948536, 0.006314115948605203, 0.6158426144565412, 0.00483903354048481],
    [0.006314115948605203, 0.3778432695948536, 0.6158426144565412, 0.00483903354048481],
    [0.6158426144565412, 0.006314115948605203, 0.3778432695948536, 0.00483903354048481],
    [0.006314115948605203, 0.6158426144565412, 0.3778432695948536, 0.00483903354048481],
    [0.30663547906235666, 0.5590480003902958, 0.13431652054734755, 0.025804906534650025],
    [0.5590480003902958, 0.30663547906235666, 0.13431652054734755, 0.025804906534650025],
    [0.30663547906235666, 0.13431652054734755, 0.5590480003902958, 0.025804906534650025],
    [0.13431652054734755, 0.30663547906235666, 0.5590480003902958, 0.025804906534650025],
    [0.5590480003902958, 0.13431652054734755, 0.30663547906235666, 0.025804906534650025],
    [0.13431652054734755, 0.5590480003902958, 0.30663547906235666, 0.025804906534650025],
    [0.2494193627747422, 0.7366067432628657, 0.013973893962392125, 0.008471091054440688],
    [0.7366067432628657, 0.2494193627747422, 0.013973893962392125, 0.008471091054440688],
    [0.2494193627747422, 0.013973893962392125, 0.7366067432628657, 0.008471091054440688],
    [0.013973893962392125, 0.2494193627747422, 0.7366067432628657, 0.008471091054440688],
    [0.7366067432628657, 0.013973893962392125, 0.2494193627747422, 0.008471091054440688],
    [0.013973893962392125, 0.7366067432628657, 0.2494193627747422, 0.008471091054440688],
    [0.21277572480280177, 0.7116751422874341, 0.07554913290976417, 0.01835491410627974],
    [0.7116751422874341, 0.21277572480280177, 0.07554913290976417, 0.01835491410627974],
    [0.21277572480280177, 0.07554913290976417, 0.7116751422874341, 0.01835491410627974],
    [0.07554913290976417, 0.21277572480280177, 0.7116751422874341, 0.01835491410627974],
    [0.7116751422874341, 0.07554913290976417, 0.21277572480280177, 0.01835491410627974],
    [0.07554913290976417, 0.7116751422874341, 0.21277572480280177, 0.01835491410627974],
    [0.14696543605323936, 0.8614027171549874, -0.008368153208226703, 0.0007044046779082087],
    [0.8614027171549874, 0.14696543605323936, -0.008368153208226703, 0.0007044046779082087],
    [0.14696543605323936, -0.008368153208226703, 0.8614027171549874, 0.0007044046779082087],
    [-0.008368153208226703, 0.14696543605323936, 0.8614027171549874, 0.0007044046779082087],
    [0.8614027171549874, -0.008368153208226703, 0.14696543605323936, 0.0007044046779082087],
    [-0.008368153208226703, 0.8614027171549874, 0.14696543605323936, 0.0007044046779082087],
    [0.13772697882892326, 0.8355869579123627, 0.026686063258714032, 0.010112684927461882],
    [0.8355869579123627, 0.13772697882892326, 0.026686063258714032, 0.010112684927461882],
    [0.13772697882892326, 0.026686063258714032, 0.8355869579123627, 0.010112684927461882],
    [0.026686063258714032, 0.13772697882892326, 0.8355869579123627, 0.010112684927461882],
    [0.8355869579123627, 0.026686063258714032, 0.13772697882892326, 0.010112684927461882],
    [0.026686063258714032, 0.8355869579123627, 0.13772697882892326, 0.010112684927461882],
    [0.05969610914900639, 0.929756171556853, 0.010547719294140667, 0.003573909385950299],
    [0.929756171556853, 0.05969610914900639, 0.010547719294140667, 0.003573909385950299],
    [0.05969610914900639, 0.010547719294140667, 0.929756171556853, 0.003573909385950299],
    [0.010547719294140667, 0.05969610914900639, 0.929756171556853, 0.003573909385950299],
    [0.929756171556853, 0.010547719294140667, 0.05969610914900639, 0.003573909385950299],
    [0.010547719294140667, 0.929756171556853, 0.05969610914900639, 0.003573909385950299],
];

pub(super) const RULES: [&[[f64; 4]]; 20] = [
    DEGREE_1, DEGREE_2, DEGREE_3, DEGREE_4, DEGREE_5, DEGREE_6, DEGREE_7, DEGREE_8, DEGREE_9, DEGREE_10, DEGREE_11, DEGREE_12, DEGREE_13, DEGREE_14, DEGREE_15, DEGREE_16, DEGREE_17, DEGREE_18, DEGREE_19, DEGREE_20,
];
