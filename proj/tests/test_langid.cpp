#include <cstdio>

#include "doctest.h"
#include "redebunk/langid.hpp"

using namespace redebunk;

namespace {

// Held-out validation sentences, 50 per language, disjoint from the profile
// training text. News and claim register, 40-130 characters.
const char* kEnglish[] = {
    "Vitamin C will protect you from the coronavirus according to a viral post.",
    "The city council voted to extend the mask requirement until the end of March.",
    "A viral message claims that drinking warm water flushes the virus into the stomach.",
    "Health workers received their second dose of the vaccine at the regional clinic.",
    "The video actually shows a flood from twenty years ago, not last week's storm.",
    "Officials denied that the airport will close because of the new travel rules.",
    "Scientists found no link between the mobile network and the spread of the disease.",
    "The hospital said the photo of crowded corridors was taken in another country.",
    "A false post says that eating two bananas a day keeps the infection away.",
    "The ministry confirmed that schools will remain open despite rising cases.",
    "Researchers tested the claim and found no evidence to support it at all.",
    "The image of the burning parliament building was created with editing software.",
    "Local farmers protested against the new tax on diesel and fertilizer prices.",
    "There is no proof that the mayor resigned over the corruption scandal.",
    "The recording does not show a secret meeting between the two presidents.",
    "Experts warned that the fake job offers are spreading through messaging apps.",
    "The claim that the tap water was poisoned has been rejected by the authorities.",
    "A manipulated chart exaggerates the number of deaths reported last winter.",
    "The national weather service never issued a tsunami warning for the coast.",
    "Doctors say that holding your breath is not a reliable test for the illness.",
    "The photograph of the giant snake was staged for an advertising campaign.",
    "The government has not announced free electricity for poor households.",
    "Police clarified that the viral kidnapping story was invented by pranksters.",
    "The bank warned customers about fraudulent text messages asking for codes.",
    "An old clip of a military parade is being shared as if it were recent.",
    "The study did not conclude that coffee prevents any serious disease.",
    "The airline refused to comment on the rumour about cancelled routes.",
    "The famous actor never endorsed the miracle weight loss pills in the advert.",
    "Election officials said the ballots in the video were training materials.",
    "The charity confirmed the donation drive on its official website yesterday.",
    "A fake letter circulating online announces a curfew that does not exist.",
    "The museum denies that the painting was stolen during the renovation works.",
    "There is no registered company behind the investment scheme promoted online.",
    "The viral list of banned foods was not published by the health department.",
    "Engineers explained that the bridge collapsed because of a design flaw.",
    "The football club dismissed reports that the coach had already signed elsewhere.",
    "Satellite images do not show a new island appearing near the northern coast.",
    "The recipe claiming to cure diabetes in a week has no scientific basis.",
    "Journalists traced the quote and found it was taken out of context entirely.",
    "The university denied rumours that final exams would be cancelled this year.",
    "A deepfake video of the prime minister spread quickly before it was removed.",
    "The label on the bottle does not prove the juice kills bacteria or viruses.",
    "Residents reported long queues at petrol stations after the false shortage alert.",
    "The zoo said no animals escaped during the storm despite the viral posts.",
    "Historians pointed out that the photo predates the war by several decades.",
    "The company never promised free smartphones to the first million subscribers.",
    "Analysts said the currency did not crash as claimed by the viral thread.",
    "The health agency lists no approved herbal cure for the new infection.",
    "The screenshot of the news bulletin was fabricated with an online generator.",
    "Officials confirmed the water supply is safe after tests in three laboratories.",
};

const char* kSpanish[] = {
    "La vitamina C no te protege del coronavirus según los especialistas consultados.",
    "El ayuntamiento aprobó ampliar el uso obligatorio de mascarilla hasta marzo.",
    "Un mensaje viral asegura que beber agua tibia arrastra el virus al estómago.",
    "Los sanitarios recibieron la segunda dosis de la vacuna en la clínica regional.",
    "El vídeo muestra en realidad una inundación de hace veinte años, no la de ayer.",
    "Las autoridades negaron que el aeropuerto vaya a cerrar por las nuevas normas.",
    "Los científicos no hallaron relación entre la red móvil y el contagio.",
    "El hospital aclaró que la foto de los pasillos llenos es de otro país.",
    "Una publicación falsa dice que comer dos plátanos al día evita la infección.",
    "El ministerio confirmó que las escuelas seguirán abiertas pese a los casos.",
    "Los investigadores comprobaron la afirmación y no encontraron ninguna prueba.",
    "La imagen del parlamento en llamas fue creada con un programa de edición.",
    "Los agricultores protestaron contra el nuevo impuesto al gasóleo y los abonos.",
    "No hay pruebas de que el alcalde dimitiera por el escándalo de corrupción.",
    "La grabación no muestra una reunión secreta entre los dos presidentes.",
    "Los expertos advirtieron de las falsas ofertas de empleo en las aplicaciones.",
    "Las autoridades desmintieron que el agua del grifo estuviera envenenada.",
    "Un gráfico manipulado exagera el número de muertes del pasado invierno.",
    "El servicio meteorológico nunca emitió un aviso de tsunami para la costa.",
    "Los médicos dicen que aguantar la respiración no sirve para detectar la enfermedad.",
    "La fotografía de la serpiente gigante fue un montaje publicitario.",
    "El gobierno no ha anunciado electricidad gratis para los hogares pobres.",
    "La policía aclaró que la historia del secuestro fue inventada como broma.",
    "El banco alertó de mensajes fraudulentos que piden códigos a los clientes.",
    "Un vídeo antiguo de un desfile militar se comparte como si fuera reciente.",
    "El estudio no concluyó que el café prevenga ninguna enfermedad grave.",
    "La aerolínea no quiso comentar el rumor sobre las rutas canceladas.",
    "El actor famoso nunca recomendó las pastillas milagrosas del anuncio.",
    "La junta electoral explicó que las papeletas del vídeo eran material de prueba.",
    "La organización benéfica confirmó ayer la campaña de donaciones en su web.",
    "Una carta falsa que circula en internet anuncia un toque de queda inexistente.",
    "El museo niega que el cuadro fuera robado durante las obras de reforma.",
    "No existe ninguna empresa registrada detrás del plan de inversión anunciado.",
    "La lista viral de alimentos prohibidos no fue publicada por sanidad.",
    "Los ingenieros explicaron que el puente se derrumbó por un fallo de diseño.",
    "El club desmintió que el entrenador hubiera firmado ya con otro equipo.",
    "Las imágenes de satélite no muestran una isla nueva frente a la costa norte.",
    "La receta que promete curar la diabetes en una semana carece de base científica.",
    "Los periodistas rastrearon la cita y comprobaron que estaba sacada de contexto.",
    "La universidad negó los rumores sobre la cancelación de los exámenes finales.",
    "Un vídeo falso del presidente se difundió rápidamente antes de ser retirado.",
    "La etiqueta de la botella no demuestra que el zumo mate bacterias ni virus.",
    "Los vecinos hicieron colas en las gasolineras tras la falsa alerta de escasez.",
    "El zoológico aseguró que ningún animal escapó durante la tormenta.",
    "Los historiadores señalaron que la foto es anterior a la guerra por décadas.",
    "La empresa nunca prometió teléfonos gratis al primer millón de clientes.",
    "Los analistas dijeron que la moneda no se hundió como afirma el hilo viral.",
    "La agencia de salud no recoge ninguna cura herbal aprobada para la infección.",
    "La captura del informativo fue fabricada con un generador en línea.",
    "Las autoridades confirmaron que el agua es segura tras los análisis de tres laboratorios.",
};

const char* kPortuguese[] = {
    "A vitamina C não protege você do coronavírus, segundo os especialistas ouvidos.",
    "A câmara municipal aprovou prorrogar o uso obrigatório de máscara até março.",
    "Uma mensagem viral garante que beber água morna empurra o vírus para o estômago.",
    "Os profissionais de saúde receberam a segunda dose da vacina na clínica regional.",
    "O vídeo mostra na verdade uma enchente de vinte anos atrás, não a de ontem.",
    "As autoridades negaram que o aeroporto vá fechar por causa das novas regras.",
    "Os cientistas não encontraram ligação entre a rede de celular e o contágio.",
    "O hospital esclareceu que a foto dos corredores lotados é de outro país.",
    "Uma publicação falsa diz que comer duas bananas por dia evita a infecção.",
    "O ministério confirmou que as escolas continuarão abertas apesar dos casos.",
    "Os pesquisadores verificaram a alegação e não acharam nenhuma evidência.",
    "A imagem do parlamento em chamas foi criada com um programa de edição.",
    "Os agricultores protestaram contra o novo imposto sobre o diesel e os adubos.",
    "Não há provas de que o prefeito tenha renunciado pelo escândalo de corrupção.",
    "A gravação não mostra uma reunião secreta entre os dois presidentes.",
    "Os especialistas alertaram para as falsas ofertas de emprego nos aplicativos.",
    "As autoridades desmentiram que a água da torneira estivesse envenenada.",
    "Um gráfico manipulado exagera o número de mortes do inverno passado.",
    "O serviço de meteorologia nunca emitiu alerta de tsunami para o litoral.",
    "Os médicos dizem que prender a respiração não serve para detectar a doença.",
    "A fotografia da cobra gigante foi uma montagem para uma campanha publicitária.",
    "O governo não anunciou energia elétrica de graça para as famílias pobres.",
    "A polícia esclareceu que a história do sequestro foi inventada por brincadeira.",
    "O banco alertou os clientes sobre mensagens fraudulentas pedindo códigos.",
    "Um vídeo antigo de um desfile militar circula como se fosse recente.",
    "O estudo não concluiu que o café previna qualquer doença grave.",
    "A companhia aérea não quis comentar o boato sobre as rotas canceladas.",
    "O ator famoso nunca recomendou as pílulas milagrosas do anúncio.",
    "A justiça eleitoral explicou que as cédulas do vídeo eram material de treino.",
    "A instituição de caridade confirmou ontem a campanha de doações no site.",
    "Uma carta falsa que circula na internet anuncia um toque de recolher inexistente.",
    "O museu nega que o quadro tenha sido roubado durante a reforma.",
    "Não existe nenhuma empresa registrada por trás do esquema de investimento.",
    "A lista viral de alimentos proibidos não foi publicada pela saúde.",
    "Os engenheiros explicaram que a ponte desabou por uma falha de projeto.",
    "O clube desmentiu que o técnico já tivesse assinado com outro time.",
    "As imagens de satélite não mostram uma ilha nova perto da costa norte.",
    "A receita que promete curar o diabetes em uma semana não tem base científica.",
    "Os jornalistas rastrearam a citação e viram que estava fora de contexto.",
    "A universidade negou os boatos sobre o cancelamento das provas finais.",
    "Um vídeo falso do presidente se espalhou rapidamente antes de ser removido.",
    "O rótulo da garrafa não prova que o suco mate bactérias nem vírus.",
    "Os moradores fizeram filas nos postos depois do falso alerta de escassez.",
    "O zoológico garantiu que nenhum animal fugiu durante a tempestade.",
    "Os historiadores apontaram que a foto é décadas anterior à guerra.",
    "A empresa nunca prometeu celulares grátis ao primeiro milhão de clientes.",
    "Os analistas disseram que a moeda não despencou como afirma o post viral.",
    "A agência de saúde não lista nenhuma cura natural aprovada para a infecção.",
    "A captura de tela do telejornal foi fabricada com um gerador on-line.",
    "As autoridades confirmaram que a água é segura após os testes em três laboratórios.",
};

const char* kHindi[] = {
    "विटामिन सी आपको कोरोना वायरस से नहीं बचाता, विशेषज्ञों ने यह साफ किया है।",
    "नगर परिषद ने मार्च के अंत तक मास्क की अनिवार्यता बढ़ाने का फैसला किया।",
    "एक वायरल संदेश में दावा है कि गुनगुना पानी पीने से वायरस पेट में चला जाता है।",
    "स्वास्थ्य कर्मियों को क्षेत्रीय क्लिनिक में टीके की दूसरी खुराक दी गई।",
    "वीडियो असल में बीस साल पुरानी बाढ़ का है, पिछले हफ्ते के तूफान का नहीं।",
    "अधिकारियों ने नए नियमों की वजह से हवाई अड्डा बंद होने की खबर का खंडन किया।",
    "वैज्ञानिकों को मोबाइल नेटवर्क और बीमारी फैलने के बीच कोई संबंध नहीं मिला।",
    "अस्पताल ने बताया कि भीड़ भरे गलियारों की तस्वीर किसी और देश की है।",
    "एक झूठी पोस्ट कहती है कि रोज दो केले खाने से संक्रमण नहीं होता।",
    "मंत्रालय ने पुष्टि की कि मामले बढ़ने के बावजूद स्कूल खुले रहेंगे।",
    "शोधकर्ताओं ने दावे की जांच की और उन्हें कोई सबूत नहीं मिला।",
    "जलती संसद की तस्वीर एडिटिंग सॉफ्टवेयर से बनाई गई थी।",
    "किसानों ने डीजल और खाद पर नए कर के खिलाफ प्रदर्शन किया।",
    "इस बात का कोई प्रमाण नहीं कि महापौर ने घोटाले के कारण इस्तीफा दिया।",
    "रिकॉर्डिंग में दोनों राष्ट्रपतियों की कोई गुप्त बैठक नहीं दिखती।",
    "विशेषज्ञों ने मैसेजिंग ऐप पर फैल रहे फर्जी नौकरी के प्रस्तावों से आगाह किया।",
    "अधिकारियों ने नल के पानी में जहर मिलाए जाने के दावे को खारिज किया।",
    "एक छेड़छाड़ किया गया चार्ट पिछली सर्दियों की मौतों की संख्या बढ़ाकर दिखाता है।",
    "मौसम विभाग ने तट के लिए कभी सुनामी की चेतावनी जारी नहीं की।",
    "डॉक्टर कहते हैं कि सांस रोकना बीमारी की जांच का भरोसेमंद तरीका नहीं है।",
    "विशाल सांप की तस्वीर एक विज्ञापन अभियान के लिए बनाई गई थी।",
    "सरकार ने गरीब परिवारों के लिए मुफ्त बिजली की कोई घोषणा नहीं की है।",
    "पुलिस ने साफ किया कि अपहरण की वायरल कहानी शरारत में गढ़ी गई थी।",
    "बैंक ने ग्राहकों को कोड मांगने वाले धोखाधड़ी भरे संदेशों से सावधान किया।",
    "सैन्य परेड की पुरानी क्लिप को हाल की बताकर साझा किया जा रहा है।",
    "अध्ययन में यह नतीजा नहीं निकला कि कॉफी किसी गंभीर बीमारी से बचाती है।",
    "विमान कंपनी ने रद्द मार्गों की अफवाह पर टिप्पणी से इनकार किया।",
    "मशहूर अभिनेता ने विज्ञापन की चमत्कारी गोलियों का कभी समर्थन नहीं किया।",
    "चुनाव अधिकारियों ने कहा कि वीडियो के मतपत्र प्रशिक्षण सामग्री थे।",
    "संस्था ने कल अपनी आधिकारिक वेबसाइट पर दान अभियान की पुष्टि की।",
    "इंटरनेट पर फैल रहा फर्जी पत्र ऐसे कर्फ्यू की घोषणा करता है जो है ही नहीं।",
    "संग्रहालय ने मरम्मत के दौरान पेंटिंग चोरी होने की बात से इनकार किया।",
    "ऑनलाइन प्रचारित निवेश योजना के पीछे कोई पंजीकृत कंपनी नहीं है।",
    "प्रतिबंधित खाने की वायरल सूची स्वास्थ्य विभाग ने जारी नहीं की।",
    "इंजीनियरों ने बताया कि पुल डिजाइन की खामी की वजह से गिरा।",
    "क्लब ने उन खबरों को खारिज किया कि कोच ने दूसरी टीम से करार कर लिया है।",
    "उपग्रह की तस्वीरों में उत्तरी तट के पास कोई नया द्वीप नहीं दिखता।",
    "एक हफ्ते में मधुमेह ठीक करने का दावा करने वाले नुस्खे का कोई वैज्ञानिक आधार नहीं।",
    "पत्रकारों ने बयान की पड़ताल की और पाया कि उसे संदर्भ से काटकर पेश किया गया।",
    "विश्वविद्यालय ने अंतिम परीक्षाएं रद्द होने की अफवाहों का खंडन किया।",
    "प्रधानमंत्री का एक फर्जी वीडियो हटाए जाने से पहले तेजी से फैल गया।",
    "बोतल का लेबल यह साबित नहीं करता कि जूस बैक्टीरिया या वायरस मारता है।",
    "किल्लत की झूठी खबर के बाद पेट्रोल पंपों पर लंबी कतारें लग गईं।",
    "चिड़ियाघर ने कहा कि तूफान के दौरान कोई जानवर नहीं भागा।",
    "इतिहासकारों ने बताया कि यह तस्वीर युद्ध से दशकों पहले की है।",
    "कंपनी ने पहले दस लाख ग्राहकों को मुफ्त फोन देने का वादा कभी नहीं किया।",
    "विश्लेषकों ने कहा कि मुद्रा वैसी नहीं गिरी जैसा वायरल पोस्ट में दावा है।",
    "स्वास्थ्य एजेंसी की सूची में संक्रमण का कोई स्वीकृत हर्बल इलाज नहीं है।",
    "समाचार बुलेटिन का स्क्रीनशॉट एक ऑनलाइन जनरेटर से बनाया गया था।",
    "तीन प्रयोगशालाओं की जांच के बाद अधिकारियों ने पानी को सुरक्षित बताया।",
};

const char* kFrench[] = {
    "La vitamine C ne vous protège pas du coronavirus selon les spécialistes interrogés.",
    "Le conseil municipal a voté la prolongation du masque obligatoire jusqu'en mars.",
    "Un message viral affirme que boire de l'eau tiède pousse le virus vers l'estomac.",
    "Les soignants ont reçu leur deuxième dose de vaccin à la clinique régionale.",
    "La vidéo montre en réalité une inondation d'il y a vingt ans, pas celle d'hier.",
    "Les autorités ont démenti la fermeture de l'aéroport à cause des nouvelles règles.",
    "Les scientifiques n'ont trouvé aucun lien entre le réseau mobile et la contagion.",
    "L'hôpital a précisé que la photo des couloirs bondés vient d'un autre pays.",
    "Une publication mensongère affirme que manger deux bananes par jour évite l'infection.",
    "Le ministère a confirmé que les écoles resteront ouvertes malgré les cas.",
    "Les chercheurs ont vérifié l'affirmation et n'ont trouvé aucune preuve.",
    "L'image du parlement en flammes a été créée avec un logiciel de retouche.",
    "Les agriculteurs ont manifesté contre la nouvelle taxe sur le gazole et les engrais.",
    "Rien ne prouve que le maire ait démissionné à cause du scandale de corruption.",
    "L'enregistrement ne montre pas une réunion secrète entre les deux présidents.",
    "Les experts ont mis en garde contre les fausses offres d'emploi sur les applications.",
    "Les autorités ont démenti que l'eau du robinet ait été empoisonnée.",
    "Un graphique manipulé exagère le nombre de morts de l'hiver dernier.",
    "La météo nationale n'a jamais émis d'alerte au tsunami pour la côte.",
    "Les médecins rappellent que retenir son souffle ne détecte pas la maladie.",
    "La photographie du serpent géant était un montage publicitaire.",
    "Le gouvernement n'a pas annoncé l'électricité gratuite pour les foyers modestes.",
    "La police a précisé que l'histoire d'enlèvement avait été inventée par des farceurs.",
    "La banque a alerté ses clients sur des messages frauduleux demandant des codes.",
    "Une vieille séquence de défilé militaire circule comme si elle était récente.",
    "L'étude n'a pas conclu que le café prévient une quelconque maladie grave.",
    "La compagnie aérienne a refusé de commenter la rumeur sur les lignes supprimées.",
    "Le célèbre acteur n'a jamais recommandé les pilules miracles de la publicité.",
    "La commission électorale a expliqué que les bulletins de la vidéo servaient d'exercice.",
    "L'association caritative a confirmé hier la collecte de dons sur son site officiel.",
    "Une fausse lettre qui circule en ligne annonce un couvre-feu qui n'existe pas.",
    "Le musée dément que le tableau ait été volé pendant les travaux de rénovation.",
    "Aucune société enregistrée ne se cache derrière le placement vanté en ligne.",
    "La liste virale d'aliments interdits n'a pas été publiée par la santé publique.",
    "Les ingénieurs ont expliqué que le pont s'est effondré à cause d'un défaut de conception.",
    "Le club a démenti que l'entraîneur ait déjà signé ailleurs cette saison.",
    "Les images satellites ne montrent aucune nouvelle île près de la côte nord.",
    "La recette qui promet de guérir le diabète en une semaine n'a aucun fondement.",
    "Les journalistes ont retrouvé la citation et montré qu'elle était sortie de son contexte.",
    "L'université a démenti les rumeurs d'annulation des examens de fin d'année.",
    "Une fausse vidéo du premier ministre s'est répandue avant d'être retirée.",
    "L'étiquette de la bouteille ne prouve pas que le jus tue les bactéries ou les virus.",
    "Les habitants ont fait la queue aux stations-service après la fausse alerte de pénurie.",
    "Le zoo a assuré qu'aucun animal ne s'était échappé pendant la tempête.",
    "Les historiens ont rappelé que la photo précède la guerre de plusieurs décennies.",
    "L'entreprise n'a jamais promis de téléphones gratuits au premier million d'abonnés.",
    "Les analystes ont indiqué que la monnaie ne s'est pas effondrée comme l'affirme le fil.",
    "L'agence sanitaire ne répertorie aucun remède à base de plantes approuvé.",
    "La capture d'écran du journal télévisé a été fabriquée avec un générateur en ligne.",
    "Les autorités ont confirmé que l'eau est sûre après des tests dans trois laboratoires.",
};

struct Sample {
    const char* code;
    const char** sentences;
    std::size_t count;
};

}  // namespace

TEST_CASE("held-out language validation: >= 90% accuracy over 250 sentences") {
    const Sample samples[] = {
        {"en", kEnglish, std::size(kEnglish)},
        {"es", kSpanish, std::size(kSpanish)},
        {"pt", kPortuguese, std::size(kPortuguese)},
        {"hi", kHindi, std::size(kHindi)},
        {"fr", kFrench, std::size(kFrench)},
    };
    std::size_t total = 0;
    std::size_t correct = 0;
    for (const auto& sample : samples) {
        REQUIRE(sample.count == 50);
        for (std::size_t i = 0; i < sample.count; ++i) {
            ++total;
            const std::string got = langid::detect_language(sample.sentences[i]);
            if (got == sample.code) {
                ++correct;
            } else {
                MESSAGE("miss: expected " << std::string(sample.code) << " got " << got
                                          << " for: " << std::string(sample.sentences[i]));
            }
        }
    }
    CHECK(total == 250);
    CHECK(static_cast<double>(correct) / static_cast<double>(total) >= 0.90);
}

TEST_CASE("detect_language contract examples") {
    CHECK(langid::detect_language("Vitamin C will protect you from the coronavirus.") == "en");
    CHECK(langid::detect_language("") == "und");
    CHECK(langid::detect_language("less than 20 chars") == "und");  // 18 chars
    const std::string spanish_prose =
        "El consumo de alimentos alcalinos no elimina el coronavirus ni protege contra la "
        "enfermedad, según los expertos consultados por la agencia de verificación durante "
        "los últimos meses de la pandemia en varios países.";
    CHECK(langid::detect_language(spanish_prose) == "es");
}

TEST_CASE("detect_language is pure: repeated calls agree") {
    const char* samples[] = {
        "The committee will meet on Thursday to discuss the proposal in detail.",
        "La policía detuvo a dos hombres sospechosos de difundir información falsa.",
        "\xff\xfe garbage bytes but long enough to pass the length floor \xff",
    };
    for (const char* s : samples) {
        const std::string first = langid::detect_language(s);
        for (int i = 0; i < 5; ++i) CHECK(langid::detect_language(s) == first);
    }
}

TEST_CASE("floor is configurable") {
    // Anything clears floor 0, nothing clears floor 1
    const char* text = "The committee will meet on Thursday to discuss the proposal.";
    CHECK(langid::detect_language(text, 0.0) != "und");
    CHECK(langid::detect_language(text, 1.0) == "und");
}
