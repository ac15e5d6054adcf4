#include "redebunk/langid.hpp"

namespace redebunk::langid {

namespace {

// Short news-register training corpora. The profiles are character-trigram
// statistics, so coverage of function words and common morphology matters
// more than topical breadth.

constexpr const char* kEnglish =
    "The government announced new measures to support hospitals during the winter season. "
    "Researchers at the university published a study showing that the vaccine remains "
    "effective against the new variant of the virus. Officials said that the number of "
    "cases has been falling steadily for three weeks. The health ministry urged people "
    "to wash their hands and avoid crowded places. Many families have struggled to pay "
    "rent since the beginning of the crisis. The central bank kept interest rates "
    "unchanged and warned about rising prices. Schools will reopen next month with "
    "smaller classes and better ventilation. The committee will meet on Thursday to "
    "discuss the proposal. Scientists believe that early testing can prevent larger "
    "outbreaks in rural communities. The president said the country must prepare for "
    "future emergencies. A spokesman for the company declined to comment on the report. "
    "Local authorities opened new centres where residents can receive free advice. "
    "The weather service expects heavy rain across the northern regions this weekend. "
    "Doctors recommend that older patients receive a booster dose in the autumn. "
    "The investigation found no evidence of fraud in the election results. "
    "Football fans celebrated in the streets after the team won the championship. "
    "The new law requires companies to publish their environmental impact every year. "
    "Police arrested two men suspected of spreading false information online. "
    "Economists warned that unemployment could rise again before the end of the year. "
    "The museum reopened after two years of renovation and attracted thousands of "
    "visitors in the first week. Farmers in the south are worried about the long "
    "drought and the price of fuel. The airline cancelled dozens of flights because "
    "of the strike. Researchers are studying how misinformation spreads on social "
    "media platforms. The council approved a plan to build affordable housing near "
    "the railway station. She said that reading the news every morning helps her "
    "understand the world. Experts agree that clean water and good food are the "
    "foundation of public health. The report shows that most people trust their "
    "local radio station more than national television. Drinking hot water with "
    "lemon will not protect you from the virus. There is no evidence that garlic "
    "can cure the disease or stop the infection. The claim that the new vaccine "
    "changes your genes is false. This video does not show a hospital in the "
    "capital. Experts say that vitamin supplements will not prevent you from "
    "catching the virus. A photo shared on social media falsely claims that the "
    "cure has been found. You cannot kill the virus by holding your breath for "
    "ten seconds. The message circulating on the platform about a national "
    "quarantine is fake. Doctors warned that drinking bleach is dangerous and "
    "will not cure anything. The post claims without proof that masks cause a "
    "lack of oxygen.";

constexpr const char* kSpanish =
    "El gobierno anunció nuevas medidas para apoyar a los hospitales durante el "
    "invierno. Los investigadores de la universidad publicaron un estudio que muestra "
    "que la vacuna sigue siendo eficaz contra la nueva variante del virus. Las "
    "autoridades dijeron que el número de casos ha bajado de manera constante durante "
    "tres semanas. El ministerio de salud pidió a la población lavarse las manos y "
    "evitar los lugares concurridos. Muchas familias han tenido dificultades para "
    "pagar el alquiler desde el comienzo de la crisis. El banco central mantuvo los "
    "tipos de interés sin cambios y advirtió sobre la subida de los precios. Las "
    "escuelas volverán a abrir el próximo mes con clases más pequeñas y mejor "
    "ventilación. El comité se reunirá el jueves para discutir la propuesta. Los "
    "científicos creen que las pruebas tempranas pueden evitar brotes mayores en las "
    "comunidades rurales. El presidente dijo que el país debe prepararse para futuras "
    "emergencias. Un portavoz de la empresa no quiso comentar el informe. Las "
    "autoridades locales abrieron nuevos centros donde los vecinos pueden recibir "
    "asesoramiento gratuito. El servicio meteorológico espera lluvias intensas en las "
    "regiones del norte este fin de semana. Los médicos recomiendan que los pacientes "
    "mayores reciban una dosis de refuerzo en otoño. La investigación no encontró "
    "pruebas de fraude en los resultados electorales. Los aficionados al fútbol "
    "celebraron en las calles después de que el equipo ganara el campeonato. La nueva "
    "ley obliga a las empresas a publicar su impacto ambiental cada año. La policía "
    "detuvo a dos hombres sospechosos de difundir información falsa en internet. Los "
    "economistas advirtieron que el desempleo podría volver a subir antes de fin de "
    "año. El museo volvió a abrir tras dos años de obras y atrajo a miles de "
    "visitantes en la primera semana. Los agricultores del sur están preocupados por "
    "la larga sequía y el precio del combustible. La aerolínea canceló decenas de "
    "vuelos a causa de la huelga. Los investigadores estudian cómo se difunde la "
    "desinformación en las redes sociales. El ayuntamiento aprobó un plan para "
    "construir viviendas asequibles cerca de la estación de tren. Ella dijo que leer "
    "las noticias cada mañana le ayuda a entender el mundo. Los expertos coinciden en "
    "que el agua limpia y la buena alimentación son la base de la salud pública. El "
    "informe muestra que la mayoría de la gente confía más en su radio local que en "
    "la televisión nacional. Además, el estudio señala que los jóvenes buscan "
    "información en otras fuentes y comparten noticias con sus amigos. Beber agua "
    "caliente con limón no te protege del virus. No hay pruebas de que el ajo cure "
    "la enfermedad ni detenga el contagio. Es falso que la nueva vacuna cambie tus "
    "genes. Este vídeo no muestra un hospital de la capital. Los expertos dicen que "
    "los suplementos de vitaminas no evitan que te contagies del virus. Una foto "
    "compartida en las redes sociales afirma falsamente que se ha encontrado la "
    "cura. No puedes matar el virus aguantando la respiración diez segundos. El "
    "mensaje que circula sobre una cuarentena nacional es falso. Los médicos "
    "advirtieron que beber lejía es peligroso y no cura nada. La publicación "
    "afirma sin pruebas que las mascarillas provocan falta de oxígeno.";

constexpr const char* kPortuguese =
    "O governo anunciou novas medidas para apoiar os hospitais durante o inverno. Os "
    "pesquisadores da universidade publicaram um estudo mostrando que a vacina "
    "continua eficaz contra a nova variante do vírus. As autoridades disseram que o "
    "número de casos vem caindo de forma constante há três semanas. O ministério da "
    "saúde pediu à população que lave as mãos e evite lugares cheios. Muitas famílias "
    "têm tido dificuldades para pagar o aluguel desde o começo da crise. O banco "
    "central manteve os juros sem alteração e alertou para a alta dos preços. As "
    "escolas vão reabrir no próximo mês com turmas menores e melhor ventilação. O "
    "comitê vai se reunir na quinta-feira para discutir a proposta. Os cientistas "
    "acreditam que os testes precoces podem evitar surtos maiores nas comunidades "
    "rurais. O presidente disse que o país precisa se preparar para futuras "
    "emergências. Um porta-voz da empresa não quis comentar o relatório. As "
    "autoridades locais abriram novos centros onde os moradores podem receber "
    "orientação gratuita. O serviço de meteorologia prevê chuvas fortes nas regiões "
    "do norte neste fim de semana. Os médicos recomendam que os pacientes mais velhos "
    "recebam uma dose de reforço no outono. A investigação não encontrou provas de "
    "fraude nos resultados das eleições. Os torcedores comemoraram nas ruas depois "
    "que o time venceu o campeonato. A nova lei obriga as empresas a divulgar seu "
    "impacto ambiental todos os anos. A polícia prendeu dois homens suspeitos de "
    "espalhar informações falsas na internet. Os economistas alertaram que o "
    "desemprego pode voltar a subir antes do fim do ano. O museu reabriu depois de "
    "dois anos de reforma e atraiu milhares de visitantes na primeira semana. Os "
    "agricultores do sul estão preocupados com a longa seca e o preço do combustível. "
    "A companhia aérea cancelou dezenas de voos por causa da greve. Os pesquisadores "
    "estudam como a desinformação se espalha nas redes sociais. A prefeitura aprovou "
    "um plano para construir moradias acessíveis perto da estação de trem. Ela disse "
    "que ler as notícias toda manhã a ajuda a entender o mundo. Os especialistas "
    "concordam que água limpa e boa alimentação são a base da saúde pública. O "
    "relatório mostra que a maioria das pessoas confia mais na rádio local do que na "
    "televisão nacional. Além disso, o estudo aponta que os jovens procuram "
    "informações em outras fontes e compartilham notícias com os amigos. Beber água "
    "quente com limão não protege você do vírus. Não há provas de que o alho cure a "
    "doença nem impeça o contágio. É falso que a nova vacina mude os seus genes. "
    "Este vídeo não mostra um hospital da capital. Os especialistas dizem que os "
    "suplementos de vitaminas não evitam que você pegue o vírus. Uma foto "
    "compartilhada nas redes sociais afirma falsamente que a cura foi encontrada. "
    "Você não consegue matar o vírus prendendo a respiração por dez segundos. A "
    "mensagem que circula sobre uma quarentena nacional é falsa. Os médicos "
    "alertaram que beber água sanitária é perigoso e não cura nada. A publicação "
    "afirma sem provas que as máscaras causam falta de oxigênio.";

constexpr const char* kHindi =
    "सरकार ने सर्दियों के दौरान अस्पतालों की मदद के लिए नए कदमों की घोषणा की। "
    "विश्वविद्यालय के शोधकर्ताओं ने एक अध्ययन प्रकाशित किया जिसमें बताया गया कि टीका "
    "वायरस के नए रूप के खिलाफ भी असरदार है। अधिकारियों ने कहा कि पिछले तीन हफ्तों से "
    "मामलों की संख्या लगातार घट रही है। स्वास्थ्य मंत्रालय ने लोगों से हाथ धोने और भीड़ "
    "वाली जगहों से बचने की अपील की। संकट की शुरुआत से ही कई परिवारों को किराया चुकाने "
    "में मुश्किल हो रही है। केंद्रीय बैंक ने ब्याज दरों में कोई बदलाव नहीं किया और बढ़ती "
    "कीमतों को लेकर चेतावनी दी। अगले महीने स्कूल छोटी कक्षाओं और बेहतर हवादार कमरों के "
    "साथ फिर खुलेंगे। समिति प्रस्ताव पर चर्चा के लिए गुरुवार को बैठक करेगी। वैज्ञानिकों का "
    "मानना है कि समय पर जांच से गांवों में बड़े प्रकोप रोके जा सकते हैं। राष्ट्रपति ने कहा "
    "कि देश को भविष्य की आपात स्थितियों के लिए तैयार रहना चाहिए। कंपनी के प्रवक्ता ने "
    "रिपोर्ट पर टिप्पणी करने से इनकार कर दिया। स्थानीय प्रशासन ने नए केंद्र खोले जहां लोग "
    "मुफ्त सलाह ले सकते हैं। मौसम विभाग ने इस सप्ताह उत्तर के इलाकों में भारी बारिश की "
    "संभावना जताई है। डॉक्टरों की सलाह है कि बुजुर्ग मरीज पतझड़ में बूस्टर खुराक लें। जांच "
    "में चुनाव के नतीजों में धोखाधड़ी का कोई सबूत नहीं मिला। टीम के चैंपियन बनने के बाद "
    "प्रशंसकों ने सड़कों पर जश्न मनाया। नया कानून कंपनियों को हर साल पर्यावरण पर असर की "
    "जानकारी देने के लिए बाध्य करता है। पुलिस ने इंटरनेट पर झूठी खबरें फैलाने के शक में दो "
    "लोगों को गिरफ्तार किया। अर्थशास्त्रियों ने चेतावनी दी कि साल खत्म होने से पहले "
    "बेरोजगारी फिर बढ़ सकती है। दो साल की मरम्मत के बाद संग्रहालय फिर खुला और पहले ही "
    "हफ्ते हजारों लोग पहुंचे। दक्षिण के किसान लंबे सूखे और ईंधन की कीमतों से परेशान हैं। "
    "हड़ताल की वजह से विमान कंपनी ने दर्जनों उड़ानें रद्द कर दीं। शोधकर्ता यह समझने की "
    "कोशिश कर रहे हैं कि सोशल मीडिया पर गलत जानकारी कैसे फैलती है। नगर परिषद ने रेलवे "
    "स्टेशन के पास सस्ते घर बनाने की योजना को मंजूरी दी। उन्होंने कहा कि रोज सुबह खबरें "
    "पढ़ने से दुनिया को समझने में मदद मिलती है। विशेषज्ञ मानते हैं कि साफ पानी और अच्छा "
    "भोजन जन स्वास्थ्य की नींव है। गर्म पानी में नींबू डालकर पीने से वायरस से बचाव नहीं "
    "होता। इस बात का कोई सबूत नहीं है कि लहसुन बीमारी ठीक कर सकता है या संक्रमण रोक "
    "सकता है। यह दावा झूठा है कि नया टीका आपके जीन बदल देता है। यह वीडियो राजधानी के "
    "अस्पताल का नहीं है। विशेषज्ञों का कहना है कि विटामिन की गोलियां वायरस से नहीं "
    "बचातीं। सोशल मीडिया पर साझा की गई तस्वीर में झूठा दावा किया गया है कि इलाज मिल "
    "गया है। दस सेकंड सांस रोकने से वायरस नहीं मरता। राष्ट्रीय कर्फ्यू को लेकर फैल रहा "
    "संदेश फर्जी है। डॉक्टरों ने चेतावनी दी कि ब्लीच पीना खतरनाक है और इससे कुछ ठीक "
    "नहीं होता। पोस्ट में बिना सबूत दावा किया गया है कि मास्क से ऑक्सीजन की कमी होती है।";

constexpr const char* kFrench =
    "Le gouvernement a annoncé de nouvelles mesures pour soutenir les hôpitaux pendant "
    "l'hiver. Les chercheurs de l'université ont publié une étude montrant que le "
    "vaccin reste efficace contre le nouveau variant du virus. Les autorités ont "
    "déclaré que le nombre de cas baisse régulièrement depuis trois semaines. Le "
    "ministère de la santé a demandé à la population de se laver les mains et d'éviter "
    "les lieux bondés. Beaucoup de familles ont du mal à payer leur loyer depuis le "
    "début de la crise. La banque centrale a maintenu ses taux d'intérêt et a mis en "
    "garde contre la hausse des prix. Les écoles rouvriront le mois prochain avec des "
    "classes plus petites et une meilleure aération. Le comité se réunira jeudi pour "
    "discuter de la proposition. Les scientifiques pensent que le dépistage précoce "
    "peut éviter de plus grandes flambées dans les communes rurales. Le président a "
    "dit que le pays doit se préparer aux urgences futures. Un porte-parole de "
    "l'entreprise a refusé de commenter le rapport. Les autorités locales ont ouvert "
    "de nouveaux centres où les habitants peuvent recevoir des conseils gratuits. La "
    "météo prévoit de fortes pluies dans les régions du nord ce week-end. Les médecins "
    "recommandent aux patients âgés de recevoir une dose de rappel à l'automne. "
    "L'enquête n'a trouvé aucune preuve de fraude dans les résultats des élections. "
    "Les supporters ont fêté dans les rues après la victoire de l'équipe en "
    "championnat. La nouvelle loi oblige les entreprises à publier chaque année leur "
    "impact sur l'environnement. La police a arrêté deux hommes soupçonnés de diffuser "
    "de fausses informations sur internet. Les économistes ont prévenu que le chômage "
    "pourrait repartir à la hausse avant la fin de l'année. Le musée a rouvert après "
    "deux ans de travaux et a attiré des milliers de visiteurs dès la première "
    "semaine. Les agriculteurs du sud s'inquiètent de la longue sécheresse et du prix "
    "du carburant. La compagnie aérienne a annulé des dizaines de vols à cause de la "
    "grève. Les chercheurs étudient comment la désinformation se propage sur les "
    "réseaux sociaux. La mairie a approuvé un projet de logements abordables près de "
    "la gare. Elle a dit que lire les nouvelles chaque matin l'aide à comprendre le "
    "monde. Les experts s'accordent à dire que l'eau propre et une bonne alimentation "
    "sont la base de la santé publique. Le rapport montre que la plupart des gens font "
    "davantage confiance à leur radio locale qu'à la télévision nationale. Boire de "
    "l'eau chaude au citron ne vous protège pas du virus. Rien ne prouve que l'ail "
    "guérisse la maladie ou arrête la contagion. Il est faux que le nouveau vaccin "
    "modifie vos gènes. Cette vidéo ne montre pas un hôpital de la capitale. Les "
    "experts disent que les compléments de vitamines n'empêchent pas d'attraper le "
    "virus. Une photo partagée sur les réseaux sociaux affirme à tort que le remède "
    "a été trouvé. On ne peut pas tuer le virus en retenant sa respiration dix "
    "secondes. Le message qui circule sur un couvre-feu national est faux. Les "
    "médecins ont averti que boire de l'eau de javel est dangereux et ne guérit "
    "rien. La publication affirme sans preuve que les masques provoquent un manque "
    "d'oxygène.";

}  // namespace

const std::vector<Profile>& bundled_profiles() {
    static const std::vector<Profile> profiles = [] {
        std::vector<Profile> p;
        p.push_back(build_profile("en", kEnglish));
        p.push_back(build_profile("es", kSpanish));
        p.push_back(build_profile("pt", kPortuguese));
        p.push_back(build_profile("hi", kHindi));
        p.push_back(build_profile("fr", kFrench));
        return p;
    }();
    return profiles;
}

}  // namespace redebunk::langid
