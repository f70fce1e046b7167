# -*- coding: utf-8 -*-
"""Hand-curated MSA practice words and phrases.

Each entry: (id slug, surface, vowelized, English translation, Arabic
example sentence containing the surface form, English example translation,
graphophonic note). Vowelization uses only the supported harakat set, with
shadda written before its vowel mark.
"""

CURATED_ITEMS = [
    ("bayt", "بيت", "بَيْت", "house",
     "هذا بيت كبير", "This is a big house.",
     "b as in 'bed'; ay is a diphthong as in 'eye'; t as in 'tip'."),
    ("kitab", "كتاب", "كِتَاب", "book",
     "قرأت كتاب الطالب", "I read the student's book.",
     "k as in 'kite'; i is a short vowel as in 'bit'; long aa as in 'father'."),
    ("salam", "سلام", "سَلَام", "peace",
     "السلام عليكم ورحمة الله", "Peace and God's mercy be upon you.",
     "s as in 'sun'; both a vowels are open; the second is lengthened by alef."),
    ("madrasa", "مدرسة", "مَدْرَسَة", "school",
     "ذهبت إلى مدرسة جديدة", "I went to a new school.",
     "m as in 'moon'; the sukun on d closes the first syllable: mad-ra-sa."),
    ("shams", "شمس", "شَمْس", "sun",
     "الشمس مشرقة اليوم", "The sun is shining today.",
     "sh as in 'ship'; the word ends in two consonants, m then s."),
    ("qamar", "قمر", "قَمَر", "moon",
     "القمر جميل الليلة", "The moon is beautiful tonight.",
     "q is a deep k pronounced at the back of the throat, unlike English k."),
    ("ma", "ماء", "مَاء", "water",
     "أشرب ماء بارد", "I drink cold water.",
     "Ends in hamza, a glottal stop like the break in 'uh-oh'."),
    ("khubz", "خبز", "خُبْز", "bread",
     "اشتريت خبز الصباح", "I bought the morning bread.",
     "kh is a raspy h as in Scottish 'loch'; u as in 'put'."),
    ("qalam", "قلم", "قَلَم", "pen",
     "هذا قلم أزرق", "This is a blue pen.",
     "q from the back of the throat; both vowels short and open."),
    ("bab", "باب", "بَاب", "door",
     "فتحت باب الغرفة", "I opened the door of the room.",
     "Long aa between two b sounds, as in 'barb' without the r."),
    ("kalb", "كلب", "كَلْب", "dog",
     "الكلب يلعب في الحديقة", "The dog is playing in the garden.",
     "The sukun on l glues l and b together: kalb, one syllable."),
    ("qitt", "قط", "قِطّ", "cat",
     "القط نائم على السرير", "The cat is sleeping on the bed.",
     "Shadda doubles the final t: hold the t slightly longer."),
    ("halib", "حليب", "حَلِيب", "milk",
     "أشرب حليب كل صباح", "I drink milk every morning.",
     "H is a breathy, whispered h from the throat, stronger than English h."),
    ("shay", "شاي", "شَاي", "tea",
     "أحب شاي النعناع", "I like mint tea.",
     "sh plus long aa, ending in y as in 'eye' said slowly: shaay."),
    ("qahwa", "قهوة", "قَهْوَة", "coffee",
     "القهوة العربية لذيذة", "Arabic coffee is delicious.",
     "q deep in the throat; h is clearly pronounced before w: qah-wa."),
    ("sayyara", "سيارة", "سَيَّارَة", "car",
     "ركبت سيارة حمراء", "I rode in a red car.",
     "Shadda doubles the y: say-yaa-ra, with a long middle syllable."),
    ("tairah", "طائرة", "طَائِرَة", "airplane",
     "الطائرة تحلق في السماء", "The airplane is flying in the sky.",
     "T is an emphatic t said with a raised tongue back; hamza breaks aa-i."),
    ("matar", "مطار", "مَطَار", "airport",
     "وصلنا إلى مطار الدوحة", "We arrived at Doha airport.",
     "Emphatic T colours the surrounding a vowels darker: ma-Taar."),
    ("funduq", "فندق", "فُنْدُق", "hotel",
     "حجزت غرفة في فندق قريب", "I booked a room in a nearby hotel.",
     "f as in 'fun'; two short u vowels as in 'put': fun-duq."),
    ("matam", "مطعم", "مَطْعَم", "restaurant",
     "أكلنا في مطعم لبناني", "We ate in a Lebanese restaurant.",
     "The ayn is a voiced throat sound with no English equivalent: maT-am."),
    ("suq", "سوق", "سُوق", "market",
     "ذهبت إلى سوق قديم", "I went to an old market.",
     "Long uu as in 'moon', ending in the deep q: suuq."),
    ("madina", "مدينة", "مَدِينَة", "city",
     "الدوحة مدينة جميلة", "Doha is a beautiful city.",
     "Long ii in the middle syllable: ma-dii-na."),
    ("bahr", "بحر", "بَحْر", "sea",
     "سبحنا في بحر هادئ", "We swam in a calm sea.",
     "Breathy H between a and r; one syllable: baHr."),
    ("jabal", "جبل", "جَبَل", "mountain",
     "تسلقنا جبل عال", "We climbed a high mountain.",
     "j as in 'jam'; two short open syllables: ja-bal."),
    ("shajara", "شجرة", "شَجَرَة", "tree",
     "في الحديقة شجرة كبيرة", "There is a big tree in the garden.",
     "Three light syllables sha-ja-ra, ending in ta marbuta."),
    ("warda", "وردة", "وَرْدَة", "rose",
     "قطفت وردة حمراء", "I picked a red rose.",
     "w as in 'wet'; sukun on r closes the first syllable: war-da."),
    ("taam", "طعام", "طَعَام", "food",
     "الطعام جاهز على المائدة", "The food is ready on the table.",
     "Emphatic T, then ayn between two long open vowels: Ta-aam."),
    ("tuffaha", "تفاحة", "تُفَّاحَة", "apple",
     "أكلت تفاحة خضراء", "I ate a green apple.",
     "Shadda doubles the f: tuf-faa-ha."),
    ("burtuqal", "برتقال", "بُرْتُقَال", "orange",
     "شربت عصير برتقال طازج", "I drank fresh orange juice.",
     "Four syllables bur-tu-qaal with the deep q in the last."),
    ("walad", "ولد", "وَلَد", "boy",
     "الولد يلعب بالكرة", "The boy is playing with the ball.",
     "w as in 'wet'; two short open syllables: wa-lad."),
    ("bint", "بنت", "بِنْت", "girl",
     "البنت تقرأ قصة", "The girl is reading a story.",
     "Short i as in 'bit'; n and t close the single syllable: bint."),
    ("rajul", "رجل", "رَجُل", "man",
     "وقف رجل أمام الباب", "A man stood in front of the door.",
     "Rolled r as in Spanish; u as in 'put': ra-jul."),
    ("imraa", "امرأة", "اِمْرَأَة", "woman",
     "جاءت امرأة كريمة", "A generous woman came.",
     "Starts with a light i; hamza on alef gives a glottal stop: im-ra-a."),
    ("sabah", "صباح", "صَبَاح", "morning",
     "قال لي صباح الخير", "He said good morning to me.",
     "S is an emphatic s with a deep, full sound: Sa-baaH."),
    ("masa", "مساء", "مَسَاء", "evening",
     "مساء الخير جميعا", "Good evening, everyone.",
     "Plain s; the word ends in long aa cut by a hamza: ma-saa'."),
    ("najma", "نجمة", "نَجْمَة", "star",
     "رأيت نجمة لامعة", "I saw a bright star.",
     "Sukun on j closes the first syllable: naj-ma."),
    ("sama", "سماء", "سَمَاء", "sky",
     "السماء صافية اليوم", "The sky is clear today.",
     "Ends in hamza after a long aa: sa-maa'."),
    ("ard", "أرض", "أَرْض", "earth",
     "الأرض مبللة بعد المطر", "The ground is wet after the rain.",
     "Starts with a glottal stop; D is an emphatic d: 'arD."),
    ("nahr", "نهر", "نَهْر", "river",
     "يجري النهر بين الجبال", "The river runs between the mountains.",
     "h is fully pronounced before r: nahr, one syllable."),
    ("miftah", "مفتاح", "مِفْتَاح", "key",
     "وضعت مفتاح البيت في جيبي", "I put the house key in my pocket.",
     "Short i, then f and t together, then long aa and breathy H: mif-taaH."),
    ("nafidha", "نافذة", "نَافِذَة", "window",
     "فتحت نافذة الغرفة", "I opened the window of the room.",
     "dh as in 'this'; first syllable long: naa-fi-dha."),
    ("shukran", "شكرا", "شُكْرًا", "thank you",
     "شكرا جزيلا على المساعدة", "Thank you very much for the help.",
     "Ends in the -an tanwin written over r before a silent alef: shuk-ran."),
    ("sabah-alkhayr", "صباح الخير", "صَبَاح الْخَيْر", "good morning",
     "أجمل تحية هي صباح الخير", "The nicest greeting is good morning.",
     "Two words; the second starts with al-, its l pronounced before kh."),
    ("maa-alsalama", "مع السلامة", "مَعَ السَّلَامَة", "goodbye",
     "قلت له مع السلامة", "I said goodbye to him.",
     "ayn ends the first word; shadda doubles the s of the second."),
]
