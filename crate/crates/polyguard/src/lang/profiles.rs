//! Embedded character n-gram language profiles.
//!
//! Each profiled language ships a small seed corpus (parallel everyday text,
//! so only the language signal differs); profiles are rank-ordered n-gram
//! tables (n = 1..3, top 400 by frequency) built from the corpus on first
//! use. Matching uses the classic out-of-place rank distance; confidence is
//! the trigram hit rate against the winning profile. Everything is embedded
//! and deterministic — no model files, no network.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use super::script::Script;

/// Version tag for the embedded profile resource.
pub const PROFILE_VERSION: &str = "1";

const PROFILE_SIZE: usize = 400;
const NGRAM_MAX: usize = 3;

/// One language's rank-ordered n-gram profile.
pub struct LanguageProfile {
    pub language: &'static str,
    ranks: HashMap<String, usize>,
    /// Every n-gram seen in the corpus (all orders), for coverage scoring.
    known: HashMap<String, usize>,
}

/// All profiles, grouped by the script whose segments they disambiguate.
pub struct ProfileSet {
    by_script: BTreeMap<Script, Vec<LanguageProfile>>,
    fingerprint: u64,
}

fn corpus_table() -> &'static [(&'static str, Script, &'static str)] {
    &[
        ("en", Script::Latin, EN),
        ("vi", Script::Latin, VI),
        ("es", Script::Latin, ES),
        ("fr", Script::Latin, FR),
        ("de", Script::Latin, DE),
        ("pt", Script::Latin, PT),
        ("it", Script::Latin, IT),
        ("nl", Script::Latin, NL),
        ("id", Script::Latin, ID),
        ("tr", Script::Latin, TR),
        ("sw", Script::Latin, SW),
        ("tl", Script::Latin, TL),
        ("hi", Script::Devanagari, HI),
        ("ne", Script::Devanagari, NE),
        ("mr", Script::Devanagari, MR),
        ("mai", Script::Devanagari, MAI),
        ("ar", Script::Arabic, AR),
        ("fa", Script::Arabic, FA),
        ("ur", Script::Arabic, UR),
        ("ru", Script::Cyrillic, RU),
        ("uk", Script::Cyrillic, UK),
    ]
}

/// Normalizes text for n-gram extraction: lowercase, non-alphanumeric runs
/// collapse to single spaces, and the result is space-padded so word
/// boundaries show up in the grams.
fn normalize(text: &str) -> Vec<char> {
    let mut chars = vec![' '];
    let mut last_space = true;
    for c in text.chars() {
        if c.is_alphanumeric() {
            chars.extend(c.to_lowercase());
            last_space = false;
        } else if !last_space {
            chars.push(' ');
            last_space = true;
        }
    }
    if !last_space {
        chars.push(' ');
    }
    chars
}

fn ngram_frequencies(chars: &[char]) -> HashMap<String, usize> {
    let mut counts = HashMap::new();
    for n in 1..=NGRAM_MAX {
        if chars.len() < n {
            continue;
        }
        for window in chars.windows(n) {
            if window.iter().all(|c| *c == ' ') {
                continue;
            }
            *counts.entry(window.iter().collect::<String>()).or_insert(0) += 1;
        }
    }
    counts
}

/// Top-`limit` n-grams by frequency, ties broken lexicographically so the
/// ranking is deterministic.
fn ranked_ngrams(counts: &HashMap<String, usize>, limit: usize) -> Vec<String> {
    let mut entries: Vec<(&String, &usize)> = counts.iter().collect();
    entries.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(b.0)));
    entries.into_iter().take(limit).map(|(g, _)| g.clone()).collect()
}

impl LanguageProfile {
    fn build(language: &'static str, corpus: &str) -> LanguageProfile {
        let chars = normalize(corpus);
        let counts = ngram_frequencies(&chars);
        let ranks = ranked_ngrams(&counts, PROFILE_SIZE)
            .into_iter()
            .enumerate()
            .map(|(rank, gram)| (gram, rank))
            .collect();
        LanguageProfile { language, ranks, known: counts }
    }

    /// Out-of-place distance of a text profile against this language,
    /// normalized to [0, 1].
    fn distance(&self, text_ranked: &[String]) -> f64 {
        if text_ranked.is_empty() {
            return 1.0;
        }
        let total: usize = text_ranked
            .iter()
            .enumerate()
            .map(|(text_rank, gram)| match self.ranks.get(gram) {
                Some(&profile_rank) => text_rank.abs_diff(profile_rank).min(PROFILE_SIZE),
                None => PROFILE_SIZE,
            })
            .sum();
        total as f64 / (text_ranked.len() * PROFILE_SIZE) as f64
    }

    /// Fraction of the text's n-gram occurrences (all orders) the corpus
    /// has seen. Answers "does this text look like the language at all",
    /// which is what the undetermined floor needs — the rank distance
    /// already decided which language fits best.
    fn coverage(&self, chars: &[char]) -> f64 {
        let mut hits = 0usize;
        let mut total = 0usize;
        for n in 1..=NGRAM_MAX {
            if chars.len() < n {
                continue;
            }
            for window in chars.windows(n) {
                if window.iter().all(|c| *c == ' ') {
                    continue;
                }
                total += 1;
                let gram: String = window.iter().collect();
                if self.known.contains_key(&gram) {
                    hits += 1;
                }
            }
        }
        if total == 0 {
            0.0
        } else {
            hits as f64 / total as f64
        }
    }
}

/// The best profile match for a piece of text.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileMatch {
    pub language: &'static str,
    /// N-gram coverage against the winning profile, in [0, 1].
    pub confidence: f64,
}

impl ProfileSet {
    fn build() -> ProfileSet {
        let mut by_script: BTreeMap<Script, Vec<LanguageProfile>> = BTreeMap::new();
        let mut fingerprint = 0xcbf29ce484222325u64;
        for (language, script, corpus) in corpus_table() {
            for byte in language.bytes().chain(corpus.bytes()) {
                fingerprint ^= byte as u64;
                fingerprint = fingerprint.wrapping_mul(0x100000001b3);
            }
            by_script
                .entry(*script)
                .or_default()
                .push(LanguageProfile::build(language, corpus));
        }
        ProfileSet { by_script, fingerprint }
    }

    /// FNV-1a fingerprint of the embedded corpora, for resource audit.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Languages profiled for a script, in table order.
    pub fn candidates(&self, script: Script) -> &[LanguageProfile] {
        self.by_script.get(&script).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Matches text against the profiles of one script group. Candidates are
    /// ranked by out-of-place distance; ties break lexicographically on the
    /// language code. Returns `None` when the script has no profiles.
    pub fn classify(&self, text: &str, script: Script) -> Option<ProfileMatch> {
        let profiles = self.candidates(script);
        if profiles.is_empty() {
            return None;
        }
        let chars = normalize(text);
        let counts = ngram_frequencies(&chars);
        let text_ranked = ranked_ngrams(&counts, PROFILE_SIZE);
        let best = profiles
            .iter()
            .map(|p| (p, p.distance(&text_ranked)))
            .min_by(|a, b| {
                a.1.partial_cmp(&b.1)
                    .unwrap_or(std::cmp::Ordering::Equal)
                    .then(a.0.language.cmp(b.0.language))
            })?;
        Some(ProfileMatch {
            language: best.0.language,
            confidence: best.0.coverage(&chars),
        })
    }
}

/// The process-wide profile set, built once from the embedded corpora.
pub fn profiles() -> &'static ProfileSet {
    static PROFILES: OnceLock<ProfileSet> = OnceLock::new();
    PROFILES.get_or_init(ProfileSet::build)
}

/// All language codes the embedded detector can name: profiled languages
/// plus every script-unique language.
pub fn supported_languages() -> Vec<&'static str> {
    let mut langs: Vec<&'static str> = corpus_table().iter().map(|(l, _, _)| *l).collect();
    for script in [
        Script::Greek,
        Script::Hebrew,
        Script::Bengali,
        Script::Gurmukhi,
        Script::Gujarati,
        Script::Oriya,
        Script::Tamil,
        Script::Telugu,
        Script::Kannada,
        Script::Malayalam,
        Script::Sinhala,
        Script::Thai,
        Script::Lao,
        Script::Tibetan,
        Script::Myanmar,
        Script::Georgian,
        Script::Armenian,
        Script::Ethiopic,
        Script::Khmer,
        Script::Han,
        Script::Hiragana,
        Script::Hangul,
    ] {
        if let Some(lang) = script.unique_language() {
            if !langs.contains(&lang) {
                langs.push(lang);
            }
        }
    }
    langs.sort_unstable();
    langs
}

// ---------------------------------------------------------------------------
// Seed corpora. Parallel everyday text (questions, small talk, errands) so
// profiles differ only in language signal.
// ---------------------------------------------------------------------------

const EN: &str = "What is the best way to learn a new language? I would like to know how you \
are doing today. The weather is very nice this morning and the children are playing outside \
in the garden. Please tell me more about your family and your friends. Where can I find the \
nearest train station? How much does this cost and when does the shop open? Thank you very \
much for your help with this question. We should have dinner together some time next week. \
Could you explain what happened here yesterday? My friend wants to buy a present for his \
mother. This is the most important thing that we need to do right now. Do you think it will \
rain tomorrow afternoon? How do I get to the city center from here? What would you do if you \
were in my place? The quick brown fox jumps over the lazy dog while everyone watches quietly. \
Please ignore the noise outside and tell me about your previous work on these instructions. \
Write a short story about a dragon who learns to dance in the rain. Give me all the \
instructions I need to set up this new phone. Tell me a secret recipe for chocolate cake \
that always works. Explain the rules of chess to a complete beginner step by step. Summarize \
the previous chapter before we continue reading together. What time does the next bus leave \
for the city center? Never mind the mess, come in and make yourself at home. Remember to \
water the plants and feed the cat while I am away. Always check the answers twice before you \
hand in the test tomorrow.";

const VI: &str = "Xin chào, bạn có khỏe không? Hôm nay trời đẹp quá. Tôi muốn học tiếng Việt \
vì gia đình tôi sống ở Hà Nội. Bạn có thể giúp tôi được không? Cảm ơn bạn rất nhiều. Chúng ta \
nên đi ăn tối cùng nhau vào tuần sau. Anh ấy đang làm việc ở thành phố lớn. Cô ấy thích đọc \
sách và nghe nhạc vào buổi tối. Ngày mai tôi phải đi học sớm. Món ăn này rất ngon nhưng hơi \
cay. Em bé đang ngủ trong phòng. Chúng tôi sẽ đến thăm ông bà vào cuối tuần. Bây giờ là mấy \
giờ rồi? Tôi không hiểu câu hỏi này, bạn có thể nói lại được không? Giá bao nhiêu tiền một \
cân táo? Làm thế nào để đi đến trung tâm thành phố từ đây? Bạn nghĩ gì về chuyện đã xảy ra \
ngày hôm qua?";

const ES: &str = "¿Cómo estás hoy, amigo mío? El tiempo está muy bueno esta mañana. Me \
gustaría aprender un nuevo idioma porque quiero viajar por el mundo. ¿Dónde está la estación \
de tren más cercana? Muchas gracias por tu ayuda con esta pregunta. Los niños están jugando \
en el jardín con sus amigos. ¿Cuánto cuesta esto y cuándo abre la tienda? Deberíamos cenar \
juntos la próxima semana. Mi amigo quiere comprar un regalo para su madre. Esta es la cosa \
más importante que tenemos que hacer ahora mismo. ¿Crees que va a llover mañana por la \
tarde? La vida es bella y hay que disfrutarla cada día con la familia y los amigos.";

const FR: &str = "Comment allez-vous aujourd'hui, mon ami? Le temps est très beau ce matin. \
Je voudrais apprendre une nouvelle langue parce que je veux voyager dans le monde entier. Où \
se trouve la gare la plus proche? Merci beaucoup pour votre aide avec cette question. Les \
enfants jouent dans le jardin avec leurs amis. Combien ça coûte et quand est-ce que le \
magasin ouvre? Nous devrions dîner ensemble la semaine prochaine. Mon ami veut acheter un \
cadeau pour sa mère. C'est la chose la plus importante que nous devons faire maintenant. \
Pensez-vous qu'il va pleuvoir demain après-midi? La vie est belle et il faut en profiter \
chaque jour avec la famille et les amis.";

const DE: &str = "Wie geht es dir heute, mein Freund? Das Wetter ist sehr schön heute Morgen. \
Ich möchte eine neue Sprache lernen, weil ich um die Welt reisen will. Wo ist der nächste \
Bahnhof? Vielen Dank für deine Hilfe bei dieser Frage. Die Kinder spielen mit ihren Freunden \
im Garten. Wie viel kostet das und wann öffnet das Geschäft? Wir sollten nächste Woche \
zusammen zu Abend essen. Mein Freund möchte ein Geschenk für seine Mutter kaufen. Das ist \
das Wichtigste, was wir jetzt tun müssen. Glaubst du, dass es morgen Nachmittag regnen wird? \
Das Leben ist schön und man muss jeden Tag mit der Familie und den Freunden genießen.";

const PT: &str = "Como você está hoje, meu amigo? O tempo está muito bom esta manhã. Eu \
gostaria de aprender uma nova língua porque quero viajar pelo mundo. Onde fica a estação de \
trem mais próxima? Muito obrigado pela sua ajuda com esta pergunta. As crianças estão \
brincando no jardim com seus amigos. Quanto custa isso e quando a loja abre? Deveríamos \
jantar juntos na próxima semana. Meu amigo quer comprar um presente para sua mãe. Esta é a \
coisa mais importante que temos que fazer agora. Você acha que vai chover amanhã à tarde? A \
vida é bela e devemos aproveitar cada dia com a família e os amigos.";

const IT: &str = "Come stai oggi, amico mio? Il tempo è molto bello questa mattina. Vorrei \
imparare una nuova lingua perché voglio viaggiare per il mondo. Dove si trova la stazione \
ferroviaria più vicina? Grazie mille per il tuo aiuto con questa domanda. I bambini stanno \
giocando in giardino con i loro amici. Quanto costa questo e quando apre il negozio? \
Dovremmo cenare insieme la prossima settimana. Il mio amico vuole comprare un regalo per sua \
madre. Questa è la cosa più importante che dobbiamo fare adesso. Pensi che pioverà domani \
pomeriggio? La vita è bella e bisogna goderla ogni giorno con la famiglia e gli amici.";

const NL: &str = "Hoe gaat het vandaag met je, mijn vriend? Het weer is erg mooi vanmorgen. \
Ik wil graag een nieuwe taal leren omdat ik de wereld rond wil reizen. Waar is het \
dichtstbijzijnde treinstation? Hartelijk dank voor je hulp bij deze vraag. De kinderen \
spelen met hun vrienden in de tuin. Hoeveel kost dit en wanneer gaat de winkel open? We \
zouden volgende week samen moeten eten. Mijn vriend wil een cadeau kopen voor zijn moeder. \
Dit is het belangrijkste wat we nu moeten doen. Denk je dat het morgenmiddag gaat regenen? \
Het leven is mooi en je moet van elke dag genieten met familie en vrienden.";

const ID: &str = "Apa kabar hari ini, temanku? Cuaca sangat bagus pagi ini. Saya ingin \
belajar bahasa baru karena saya mau berkeliling dunia. Di mana stasiun kereta api terdekat? \
Terima kasih banyak atas bantuanmu dengan pertanyaan ini. Anak-anak sedang bermain di taman \
bersama teman-teman mereka. Berapa harganya dan kapan toko itu buka? Kita harus makan malam \
bersama minggu depan. Temanku ingin membeli hadiah untuk ibunya. Ini adalah hal yang paling \
penting yang harus kita lakukan sekarang. Apakah kamu pikir besok sore akan hujan? Hidup ini \
indah dan kita harus menikmati setiap hari bersama keluarga dan teman.";

const TR: &str = "Bugün nasılsın, arkadaşım? Hava bu sabah çok güzel. Dünyayı gezmek \
istediğim için yeni bir dil öğrenmek istiyorum. En yakın tren istasyonu nerede? Bu soruyla \
ilgili yardımın için çok teşekkür ederim. Çocuklar bahçede arkadaşlarıyla oynuyorlar. Bunun \
fiyatı ne kadar ve dükkan ne zaman açılıyor? Gelecek hafta birlikte akşam yemeği yemeliyiz. \
Arkadaşım annesine bir hediye almak istiyor. Bu şu anda yapmamız gereken en önemli şey. \
Yarın öğleden sonra yağmur yağacağını düşünüyor musun? Hayat güzeldir ve her günün tadını \
aile ve arkadaşlarla çıkarmak gerekir.";

const SW: &str = "Habari yako leo, rafiki yangu? Hali ya hewa ni nzuri sana asubuhi hii. \
Ningependa kujifunza lugha mpya kwa sababu nataka kusafiri duniani kote. Kituo cha treni \
kilicho karibu kiko wapi? Asante sana kwa msaada wako kuhusu swali hili. Watoto wanacheza \
bustanini pamoja na marafiki zao. Hii inagharimu kiasi gani na duka linafunguliwa lini? \
Tunapaswa kula chakula cha jioni pamoja wiki ijayo. Rafiki yangu anataka kumnunulia mama \
yake zawadi. Hili ndilo jambo muhimu zaidi tunalopaswa kufanya sasa hivi. Unafikiri mvua \
itanyesha kesho mchana? Maisha ni mazuri na tunapaswa kufurahia kila siku na familia.";

const TL: &str = "Kumusta ka ngayong araw, kaibigan ko? Napakaganda ng panahon ngayong \
umaga. Gusto kong matuto ng bagong wika dahil gusto kong maglakbay sa buong mundo. Nasaan \
ang pinakamalapit na istasyon ng tren? Maraming salamat sa iyong tulong sa tanong na ito. \
Naglalaro ang mga bata sa hardin kasama ang kanilang mga kaibigan. Magkano ito at kailan \
magbubukas ang tindahan? Dapat tayong maghapunan nang magkasama sa susunod na linggo. Gusto \
ng kaibigan ko na bumili ng regalo para sa kanyang ina. Ito ang pinakamahalagang bagay na \
kailangan nating gawin ngayon. Sa tingin mo ba ay uulan bukas ng hapon? Maganda ang buhay \
kasama ang pamilya at mga kaibigan.";

const HI: &str = "आप आज कैसे हैं, मेरे दोस्त? आज सुबह मौसम बहुत अच्छा है। मैं एक नई भाषा सीखना चाहता हूँ \
क्योंकि मैं दुनिया की यात्रा करना चाहता हूँ। सबसे नज़दीकी रेलवे स्टेशन कहाँ है? इस सवाल में आपकी मदद के लिए बहुत \
धन्यवाद। बच्चे अपने दोस्तों के साथ बगीचे में खेल रहे हैं। इसकी कीमत कितनी है और दुकान कब खुलती है? हमें अगले \
हफ़्ते साथ में खाना खाना चाहिए। मेरा दोस्त अपनी माँ के लिए एक उपहार खरीदना चाहता है। यह सबसे ज़रूरी काम है जो \
हमें अभी करना चाहिए। क्या आपको लगता है कि कल दोपहर बारिश होगी? ज़िंदगी खूबसूरत है और हमें हर दिन का आनंद \
लेना चाहिए।";

const NE: &str = "तपाईं आज कस्तो हुनुहुन्छ, मेरो साथी? आज बिहान मौसम धेरै राम्रो छ। म नयाँ भाषा सिक्न चाहन्छु \
किनभने म संसारको यात्रा गर्न चाहन्छु। सबैभन्दा नजिकको रेल स्टेशन कहाँ छ? यो प्रश्नमा तपाईंको सहयोगको लागि धेरै \
धन्यवाद। बालबालिकाहरू आफ्ना साथीहरूसँग बगैंचामा खेलिरहेका छन्। यसको मूल्य कति हो र पसल कहिले खुल्छ? हामीले \
अर्को हप्ता सँगै खाना खानुपर्छ। मेरो साथीले आफ्नी आमाको लागि उपहार किन्न चाहन्छ। यो सबैभन्दा महत्त्वपूर्ण काम हो \
जुन हामीले अहिले गर्नुपर्छ। भोलि दिउँसो पानी पर्छ जस्तो लाग्छ तपाईंलाई? जीवन सुन्दर छ र हामीले हरेक दिनको \
आनन्द लिनुपर्छ।";

const MR: &str = "तू आज कसा आहेस, माझ्या मित्रा? आज सकाळी हवामान खूप छान आहे. मला नवीन भाषा शिकायची \
आहे कारण मला जगाचा प्रवास करायचा आहे. सर्वात जवळचे रेल्वे स्टेशन कुठे आहे? या प्रश्नात तुमच्या मदतीबद्दल खूप \
धन्यवाद. मुले आपल्या मित्रांसोबत बागेत खेळत आहेत. याची किंमत किती आहे आणि दुकान कधी उघडते? आपण पुढच्या \
आठवड्यात एकत्र जेवण केले पाहिजे. माझ्या मित्राला त्याच्या आईसाठी भेट विकत घ्यायची आहे. हे सर्वात महत्त्वाचे काम \
आहे जे आपण आता केले पाहिजे. उद्या दुपारी पाऊस पडेल असे तुला वाटते का? जीवन सुंदर आहे आणि आपण प्रत्येक \
दिवसाचा आनंद घेतला पाहिजे.";

const MAI: &str = "अहाँ आइ केहन छी, हमर संगी? आइ भोरमे मौसम बड्ड नीक अछि। हम नव भाषा सिखय चाहैत छी \
किएक तँ हम दुनियाक यात्रा करय चाहैत छी। सभसँ लगक रेल स्टेशन कतय अछि? एहि प्रश्नमे अहाँक सहायताक लेल बहुत \
धन्यवाद। बच्चा सभ अपन संगी सभक संग बगीचामे खेलाइत अछि। एकर दाम कतेक अछि आ दोकान कखन खुजैत अछि? \
हमरा सभकेँ अगिला सप्ताह संगे भोजन करबाक चाही। हमर संगी अपन माइक लेल उपहार कीनय चाहैत अछि। ई सभसँ \
जरूरी काज अछि जे हमरा सभकेँ एखन करबाक चाही। काल्हि दुपहरिया बरखा हैत से अहाँकेँ लगैत अछि? जीवन सुन्दर \
अछि आ हमरा सभकेँ हरेक दिनक आनन्द लेबाक चाही।";

const AR: &str = "كيف حالك اليوم يا صديقي؟ الطقس جميل جدا هذا الصباح. أريد أن أتعلم لغة جديدة لأنني \
أريد أن أسافر حول العالم. أين أقرب محطة قطار؟ شكرا جزيلا على مساعدتك في هذا السؤال. الأطفال يلعبون في \
الحديقة مع أصدقائهم. كم يكلف هذا ومتى يفتح المتجر؟ يجب أن نتناول العشاء معا الأسبوع المقبل. صديقي يريد أن \
يشتري هدية لأمه. هذا هو أهم شيء يجب أن نفعله الآن. هل تعتقد أنها ستمطر غدا بعد الظهر؟ الحياة جميلة ويجب \
أن نستمتع بكل يوم مع العائلة والأصدقاء.";

const FA: &str = "امروز حالت چطور است، دوست من؟ هوا امروز صبح خیلی خوب است. من می‌خواهم یک زبان \
جدید یاد بگیرم چون می‌خواهم دور دنیا سفر کنم. نزدیک‌ترین ایستگاه قطار کجاست؟ از کمک شما برای این سوال \
بسیار متشکرم. بچه‌ها با دوستان خود در باغ بازی می‌کنند. قیمت این چقدر است و مغازه کی باز می‌شود؟ ما باید \
هفته آینده با هم شام بخوریم. دوست من می‌خواهد برای مادرش هدیه بخرد. این مهم‌ترین کاری است که اکنون باید \
انجام دهیم. فکر می‌کنی فردا بعد از ظهر باران ببارد؟ زندگی زیباست و باید از هر روز با خانواده و دوستان لذت \
ببریم.";

const UR: &str = "آج آپ کیسے ہیں، میرے دوست؟ آج صبح موسم بہت اچھا ہے۔ میں ایک نئی زبان سیکھنا چاہتا \
ہوں کیونکہ میں دنیا کا سفر کرنا چاہتا ہوں۔ سب سے قریبی ریلوے اسٹیشن کہاں ہے؟ اس سوال میں آپ کی مدد کا \
بہت شکریہ۔ بچے اپنے دوستوں کے ساتھ باغ میں کھیل رہے ہیں۔ اس کی قیمت کتنی ہے اور دکان کب کھلتی ہے؟ \
ہمیں اگلے ہفتے ساتھ کھانا کھانا چاہیے۔ میرا دوست اپنی ماں کے لیے تحفہ خریدنا چاہتا ہے۔ یہ سب سے اہم کام \
ہے جو ہمیں ابھی کرنا چاہیے۔ کیا آپ کو لگتا ہے کہ کل دوپہر بارش ہوگی؟ زندگی خوبصورت ہے اور ہمیں ہر دن \
سے لطف اندوز ہونا چاہیے۔";

const RU: &str = "Как ты сегодня, мой друг? Погода очень хорошая этим утром. Я хочу выучить \
новый язык, потому что хочу путешествовать по миру. Где находится ближайший вокзал? Большое \
спасибо за твою помощь с этим вопросом. Дети играют в саду со своими друзьями. Сколько это \
стоит и когда открывается магазин? Мы должны поужинать вместе на следующей неделе. Мой друг \
хочет купить подарок для своей матери. Это самое важное, что мы должны сделать сейчас. Как \
ты думаешь, завтра днём будет дождь? Жизнь прекрасна, и надо наслаждаться каждым днём с \
семьёй и друзьями.";

const UK: &str = "Як ти сьогодні, мій друже? Погода дуже гарна цього ранку. Я хочу вивчити \
нову мову, бо хочу подорожувати світом. Де знаходиться найближчий вокзал? Щиро дякую за \
твою допомогу з цим питанням. Діти граються в саду зі своїми друзями. Скільки це коштує і \
коли відчиняється крамниця? Ми повинні повечеряти разом наступного тижня. Мій друг хоче \
купити подарунок для своєї матері. Це найважливіше, що ми маємо зробити зараз. Як ти \
гадаєш, завтра вдень буде дощ? Життя прекрасне, і треба насолоджуватися кожним днем із \
сім'єю та друзями.";
